import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cayleyaut import (
    DegenerateInputError,
    MalformedInputError,
    NotGeneratingError,
    abelian,
    ball,
    ball_saturation_radius,
    build_graph,
    cyclic,
    full_genset,
    is_graph_automorphism,
    make_genset,
)
from cayleyaut.autsearch import left_translation


class TestMakeGenset:
    def test_symmetrize_cyclic(self):
        S = make_genset(cyclic(5), [1], symmetrize=True)
        assert S.elements == (1, 4)

    def test_symmetrize_quaternion(self, q8):
        i, j = q8.element_by_name("i"), q8.element_by_name("j")
        S = make_genset(q8, [i, j], symmetrize=True)
        assert set(S.names) == {"i", "-i", "j", "-j"}

    def test_not_generating_reports_subgroup_order(self):
        with pytest.raises(NotGeneratingError) as err:
            make_genset(cyclic(4), [2], symmetrize=True)
        assert err.value.subgroup_order == 2
        assert err.value.group_order == 4

    def test_identity_rejected_without_symmetrize(self):
        with pytest.raises(MalformedInputError):
            make_genset(cyclic(5), [0, 1, 4])

    def test_identity_stripped_with_symmetrize(self):
        S = make_genset(cyclic(5), [0, 1], symmetrize=True)
        assert S.elements == (1, 4)

    def test_asymmetric_rejected(self):
        with pytest.raises(MalformedInputError):
            make_genset(cyclic(5), [1])

    def test_full_genset(self, q8):
        assert full_genset(cyclic(2)).elements == (1,)
        assert len(full_genset(q8)) == 7
        assert full_genset(cyclic(5)).elements == (1, 2, 3, 4)

    def test_full_genset_trivial_group(self):
        with pytest.raises(DegenerateInputError):
            full_genset(cyclic(1))


class TestBall:
    def test_cyclic_radius_2(self):
        S = make_genset(cyclic(5), [1], symmetrize=True)
        assert ball(S, 2).elements == (1, 2, 3, 4)

    def test_quaternion_radius_2_matches_enumeration(self, q8):
        i, j = q8.element_by_name("i"), q8.element_by_name("j")
        S = make_genset(q8, [i, j], symmetrize=True)
        # oracle: all pairwise products of the generators, plus the generators
        pairs = {q8.mul(a, b) for a, b in itertools.product(S.elements, repeat=2)}
        expected = sorted((set(S.elements) | pairs) - {q8.identity})
        got = ball(S, 2)
        assert list(got.elements) == expected
        assert len(got) == 7

    def test_radius_1_is_identity_map(self, q8):
        i, j = q8.element_by_name("i"), q8.element_by_name("j")
        S = make_genset(q8, [i, j], symmetrize=True)
        assert ball(S, 1) == S

    def test_monotone_and_saturating(self):
        G = cyclic(12)
        S = make_genset(G, [1], symmetrize=True)
        previous = set()
        for k in range(1, 8):
            current = set(ball(S, k).elements)
            assert previous <= current
            previous = current
        assert ball_saturation_radius(S) == 6
        assert ball(S, 6).elements == full_genset(G).elements

    def test_radius_validation(self):
        S = make_genset(cyclic(5), [1], symmetrize=True)
        with pytest.raises(MalformedInputError):
            ball(S, 0)

    def test_ball_is_symmetric(self):
        G = abelian([4, 3])
        S = make_genset(G, [G.element_by_name("(1,0)"), G.element_by_name("(0,1)")],
                        symmetrize=True)
        B = ball(S, 2)
        assert all(G.inv(s) in set(B.elements) for s in B.elements)

    def test_ball_composition_covers_product_radius(self):
        G = cyclic(17)
        S = make_genset(G, [1], symmetrize=True)
        nested = ball(ball(S, 2), 3)
        assert set(ball(S, 6).elements) <= set(nested.elements)


class TestCayleyGraph:
    def test_five_cycle(self):
        S = make_genset(cyclic(5), [1], symmetrize=True)
        g = build_graph(S)
        assert g.adjacency == ((1, 4), (0, 2), (1, 3), (2, 4), (0, 3))
        assert g.degree == 2

    def test_four_cycle(self):
        S = make_genset(cyclic(4), [1, 3])
        g = build_graph(S)
        assert g.adjacency == ((1, 3), (0, 2), (1, 3), (0, 2))

    def test_complete_graph(self):
        g = build_graph(full_genset(cyclic(5)))
        assert all(len(nbrs) == 4 for nbrs in g.adjacency)

    def test_edge_rule(self, q8):
        i, j = q8.element_by_name("i"), q8.element_by_name("j")
        S = make_genset(q8, [i, j], symmetrize=True)
        g = build_graph(S)
        sset = set(S.elements)
        for u in range(8):
            for v in range(8):
                has_edge = v in g.adjacency[u]
                assert has_edge == (q8.mul(q8.inv(u), v) in sset and u != v)

    def test_undirected_no_loops(self):
        g = build_graph(full_genset(abelian([2, 3])))
        for u, nbrs in enumerate(g.adjacency):
            assert u not in nbrs
            for v in nbrs:
                assert u in g.adjacency[v]

    def test_edge_count_formula(self, q8):
        # each involution colour contributes |G|/2 edges, each inverse pair |G|
        for G, gens in [
            (cyclic(6), [1, 3]),
            (q8, [q8.element_by_name("i"), q8.element_by_name("j")]),
            (abelian([2, 2]), [1, 2]),
        ]:
            S = make_genset(G, gens, symmetrize=True)
            g = build_graph(S)
            involutions = sum(1 for s in S.elements if G.inv(s) == s)
            pairs = (len(S.elements) - involutions) // 2
            expected = pairs * G.order + involutions * G.order // 2
            assert len(g.edges()) == expected

    def test_colour_classes_pair_inverses(self, q8):
        S = full_genset(q8)
        g = build_graph(S)
        for key in g.colour_keys:
            assert key == min(key, q8.inv(key))

    def test_translations_are_graph_automorphisms(self, q8):
        for G in [cyclic(6), q8]:
            S = full_genset(G)
            g = build_graph(S)
            for h in range(G.order):
                assert is_graph_automorphism(g, left_translation(G, h))

    def test_dot_export(self):
        g = build_graph(make_genset(cyclic(4), [1], symmetrize=True))
        dot = g.to_dot()
        assert dot.startswith("graph cayley {")
        assert "0 -- 1" in dot
        assert "color=" in dot

    def test_csv_export(self):
        g = build_graph(make_genset(cyclic(4), [1], symmetrize=True))
        lines = g.to_adjacency_csv().strip().splitlines()
        assert lines[0] == "source,target,colour"
        assert len(lines) == 1 + len(g.edges())


@given(
    n=st.integers(min_value=3, max_value=20),
    step=st.integers(min_value=1, max_value=19),
    k=st.integers(min_value=1, max_value=4),
)
@settings(max_examples=60, deadline=None)
def test_ball_properties_random_cyclic(n, step, k):
    G = cyclic(n)
    from math import gcd

    step = step % n
    if step == 0 or gcd(step, n) != 1:
        return  # only coprime steps generate
    S = make_genset(G, [step], symmetrize=True)
    B = ball(S, k)
    assert set(S.elements) <= set(B.elements)
    assert G.identity not in B.elements
    assert all(G.inv(s) in set(B.elements) for s in B.elements)
