import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleyaut import (
    DegenerateInputError,
    DicyclicWitness,
    FiniteGroup,
    MalformedInputError,
    abelian,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    generalized_dicyclic,
    is_isomorphic_bruteforce,
    quaternion,
    symmetric,
)
from oracles import iterated_cyclic_product


class TestArithmetic:
    def test_mul_cyclic(self):
        Z5 = cyclic(5)
        assert Z5.mul(2, 4) == 1
        assert Z5.mul(Z5.identity, 3) == 3
        assert Z5.mul(3, Z5.identity) == 3

    def test_mul_quaternion(self, q8):
        i, j, k = (q8.element_by_name(n) for n in "ijk")
        assert q8.mul(i, j) == k

    def test_mul_range_check(self):
        Z5 = cyclic(5)
        with pytest.raises(MalformedInputError):
            Z5.mul(2, 9)
        with pytest.raises(MalformedInputError):
            Z5.mul(-1, 2)

    def test_inverse(self, q8):
        Z5 = cyclic(5)
        assert Z5.inv(2) == 3
        assert Z5.inv(Z5.identity) == Z5.identity
        assert q8.inv(q8.element_by_name("i")) == q8.element_by_name("-i")

    def test_element_order(self, q8):
        Z6 = cyclic(6)
        assert Z6.element_order(2) == 3
        assert q8.element_order(q8.element_by_name("-1")) == 2
        assert q8.element_order(q8.element_by_name("i")) == 4

    def test_orders_divide_group_order(self, q8):
        for G in [cyclic(12), abelian([4, 2]), q8, symmetric(4), dihedral(5)]:
            assert all(G.order % k == 0 for k in G.element_orders)


class TestConstructors:
    def test_cyclic_trivial(self):
        G = cyclic(1)
        assert G.order == 1 and G.identity == 0

    def test_cyclic_involution_count(self):
        G = cyclic(4)
        assert sum(1 for g in range(4) if G.element_order(g) == 2) == 1

    def test_cyclic_generator_order(self):
        assert cyclic(5).element_order(1) == 5

    def test_cyclic_rejects_zero(self):
        with pytest.raises(MalformedInputError):
            cyclic(0)

    def test_direct_product_order(self, q8):
        assert direct_product(q8, cyclic(3)).order == 24

    def test_direct_product_projections_are_homomorphisms(self):
        G, H = cyclic(3), cyclic(4)
        P = direct_product(G, H)
        for a in range(P.order):
            for b in range(P.order):
                c = P.mul(a, b)
                assert c // H.order == G.mul(a // H.order, b // H.order)
                assert c % H.order == H.mul(a % H.order, b % H.order)

    def test_q8_times_z2_involution_count(self, q8):
        # oracle: components have order <= 2 exactly when the pair does
        expected = sum(1 for g in range(8) if q8.element_order(g) <= 2) * 2
        assert expected == 4
        P = direct_product(q8, cyclic(2))
        assert sum(1 for g in range(P.order) if P.element_order(g) <= 2) == 4

    def test_z3_z3_abelian_exponent(self):
        P = direct_product(cyclic(3), cyclic(3))
        assert P.is_abelian and P.exponent == 3

    def test_abelian_boolean(self):
        G = abelian([2, 2, 2])
        assert G.order == 8 and G.exponent == 2

    def test_abelian_order4_element(self):
        G = abelian([4, 2])
        assert 4 in G.element_orders

    def test_abelian_empty(self):
        assert abelian([]).order == 1

    def test_abelian_matches_iterated_product(self):
        for factors in ([2, 3], [4, 2], [2, 2, 2]):
            built = abelian(factors)
            oracle = iterated_cyclic_product(factors)
            assert is_isomorphic_bruteforce(built, oracle)

    def test_quaternion_relations(self, q8):
        one = q8.element_by_name("1")
        minus = q8.element_by_name("-1")
        i, j, k = (q8.element_by_name(n) for n in "ijk")
        assert q8.mul(i, i) == q8.mul(j, j) == q8.mul(k, k) == minus
        assert q8.mul(q8.mul(i, j), k) == minus
        assert q8.identity == one

    def test_quaternion_unique_involution(self, q8):
        invs = [g for g in range(8) if q8.element_order(g) == 2]
        assert invs == [q8.element_by_name("-1")]

    def test_quaternion_center_by_enumeration(self, q8):
        center = [
            g for g in range(8) if all(q8.mul(g, h) == q8.mul(h, g) for h in range(8))
        ]
        assert sorted(q8.names[g] for g in center) == ["-1", "1"]

    def test_symmetric_dihedral_alternating_orders(self):
        assert symmetric(4).order == 24
        assert alternating(4).order == 12
        assert dihedral(4).order == 8
        assert not dihedral(4).is_abelian
        assert dihedral(2).order == 4 and dihedral(2).is_abelian


class TestGeneralizedDicyclic:
    def test_z4_gives_quaternion(self, q8):
        G, witness = generalized_dicyclic(cyclic(4), 2)
        witness.validate(G)
        assert is_isomorphic_bruteforce(G, q8)

    def test_z6_gives_order_12(self):
        G, witness = generalized_dicyclic(cyclic(6), 3)
        assert G.order == 12
        assert not G.is_abelian
        witness.validate(G)
        assert G.element_order(witness.x) == 4

    def test_exponent2_base_rejected(self):
        klein = abelian([2, 2])
        with pytest.raises(DegenerateInputError):
            generalized_dicyclic(klein, 1)

    def test_y_must_have_order_2(self):
        with pytest.raises(MalformedInputError):
            generalized_dicyclic(cyclic(4), 1)  # order 4
        with pytest.raises(MalformedInputError):
            generalized_dicyclic(cyclic(4), 0)  # identity

    def test_non_abelian_base_rejected(self):
        with pytest.raises(MalformedInputError):
            minus = quaternion().element_by_name("-1")
            generalized_dicyclic(quaternion(), minus)

    def test_witness_invariant_violations_detected(self):
        Z6 = cyclic(6)
        G, witness = generalized_dicyclic(Z6, 3)
        bad = DicyclicWitness(a_elements=witness.a_elements, x=0)
        with pytest.raises(MalformedInputError):
            bad.validate(G)


class TestSubgroupGenerated:
    def test_quaternion_i_span(self, q8):
        got = q8.subgroup_generated([q8.element_by_name("i")])
        assert set(q8.names[g] for g in got) == {"1", "-1", "i", "-i"}

    def test_empty_gives_identity(self, q8):
        assert q8.subgroup_generated([]) == (q8.identity,)

    def test_pairwise_inverting_index2_subgroup(self):
        from cayleyaut import h_group

        G, S = h_group(3)
        s1, s2, s3 = (G.element_by_name(f"s{i}") for i in (1, 2, 3))
        eps = G.mul(s1, s1)
        sub = G.subgroup_generated([G.mul(s1, s2), s3, eps])
        assert len(sub) == 8


class TestValidation:
    def test_rejects_non_latin(self):
        with pytest.raises(MalformedInputError):
            FiniteGroup([[0, 0], [1, 1]])

    def test_rejects_no_identity(self):
        # row 0 is an identity row but no column works two-sidedly
        with pytest.raises(MalformedInputError):
            FiniteGroup([[0, 1, 2], [2, 0, 1], [1, 2, 0]])

    def test_rejects_non_associative(self):
        # a Latin square with identity that fails associativity (order 5 loop)
        table = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ]
        with pytest.raises(MalformedInputError):
            FiniteGroup(table)

    def test_rejects_bad_names(self):
        with pytest.raises(MalformedInputError):
            FiniteGroup([[0, 1], [1, 0]], names=["a"])
        with pytest.raises(MalformedInputError):
            FiniteGroup([[0, 1], [1, 0]], names=["a", "a"])


@given(n=st.integers(min_value=1, max_value=40), data=st.data())
@settings(max_examples=60, deadline=None)
def test_cyclic_group_laws(n, data):
    G = cyclic(n)
    g = data.draw(st.integers(min_value=0, max_value=n - 1))
    h = data.draw(st.integers(min_value=0, max_value=n - 1))
    assert G.mul(g, G.inv(g)) == G.identity
    assert G.mul(g, h) == (g + h) % n
    assert n % G.element_order(g) == 0


@given(
    factors=st.lists(st.integers(min_value=1, max_value=5), min_size=0, max_size=3),
    data=st.data(),
)
@settings(max_examples=40, deadline=None)
def test_abelian_group_laws(factors, data):
    G = abelian(factors)
    g = data.draw(st.integers(min_value=0, max_value=G.order - 1))
    h = data.draw(st.integers(min_value=0, max_value=G.order - 1))
    assert G.mul(g, h) == G.mul(h, g)
    assert G.mul(G.inv(g), g) == G.identity
