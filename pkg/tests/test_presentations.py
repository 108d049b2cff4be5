import pytest

from cayleyaut import (
    MalformedInputError,
    ParseError,
    ResourceLimitError,
    h_group,
    is_isomorphic_bruteforce,
    parse_presentation,
    quaternion,
    todd_coxeter,
)
from oracles import extend_generator_map, pairwise_inverting_model


class TestParser:
    def test_single_power_relator(self):
        pres = parse_presentation("< a | a^5 >")
        assert pres.generators == ("a",)
        assert pres.relators == ((0,) * 5,)

    def test_word_relator(self):
        pres = parse_presentation("< s1, s2 | s1 s2 s1^-1 s2 >")
        assert pres.generators == ("s1", "s2")
        assert pres.relators == ((0, 2, 1, 2),)

    def test_unknown_generator_has_position(self):
        with pytest.raises(ParseError) as err:
            parse_presentation("< a | b^2 >")
        assert err.value.position == 6

    def test_unbalanced(self):
        with pytest.raises(ParseError):
            parse_presentation("< a | a^2")
        with pytest.raises(ParseError):
            parse_presentation("a | a^2 >")
        with pytest.raises(ParseError):
            parse_presentation("< a, | a >")

    def test_duplicate_generator(self):
        with pytest.raises(ParseError):
            parse_presentation("< a, a | a^2 >")

    def test_star_separator_and_negative_powers(self):
        pres = parse_presentation("< a, b | a*b^-2*a^3 >")
        assert pres.relators == ((0, 3, 3, 0, 0, 0),)

    def test_str_round_trip(self):
        text = "< s1, s2 | s1^2*s2^-2, s1*s2*s1^-1*s2 >"
        pres = parse_presentation(text)
        again = parse_presentation(str(pres))
        assert again == pres


class TestToddCoxeter:
    @pytest.mark.parametrize("n", list(range(1, 65)))
    def test_cyclic_orders(self, n):
        G, table = todd_coxeter(parse_presentation(f"< a | a^{n} >"), 200)
        assert G.order == n
        assert table.count == n

    def test_coset_table_shape(self):
        _G, table = todd_coxeter(parse_presentation("< a, b | a^3, b^2, a b a b >"), 100)
        assert table.count == 6
        # generator columns act as permutations and row 0 is the identity coset
        for x in range(2 * table.ngens):
            assert sorted(row[x] for row in table.rows) == list(range(table.count))

    def test_s3_from_presentation(self):
        from cayleyaut import symmetric

        G, _ = todd_coxeter(parse_presentation("< a, b | a^3, b^2, a b a b >"), 100)
        assert is_isomorphic_bruteforce(G, symmetric(3))

    def test_quaternion_presentation(self):
        pres = parse_presentation("< i, j | i^2 j^-2, i j i^-1 j >")
        G, _ = todd_coxeter(pres, 100)
        assert G.order == 8
        assert is_isomorphic_bruteforce(G, quaternion())

    def test_free_group_hits_cap(self):
        with pytest.raises(ResourceLimitError):
            todd_coxeter(parse_presentation("< a | >"), 50)

    def test_infinite_group_hits_cap(self):
        # one Klein-bottle style relator leaves an infinite group
        with pytest.raises(ResourceLimitError):
            todd_coxeter(parse_presentation("< a, b | a b a^-1 b >"), 200)

    def test_deterministic(self):
        pres = parse_presentation("< a, b | a^4, b^2 a^-2, b a b^-1 a >")
        G1, t1 = todd_coxeter(pres, 100)
        G2, t2 = todd_coxeter(pres, 100)
        assert G1.table == G2.table
        assert t1.rows == t2.rows

    def test_max_cosets_validation(self):
        with pytest.raises(MalformedInputError):
            todd_coxeter(parse_presentation("< a | a >"), 0)


class TestHGroupFamily:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_orders(self, n):
        G, S = h_group(n)
        assert G.order == 2 ** (n + 1)
        assert len(S) == 2 * n

    def test_h2_is_quaternion(self):
        G, _ = h_group(2)
        assert is_isomorphic_bruteforce(G, quaternion())

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_generator_squares_equal_and_central(self, n):
        G, _ = h_group(n)
        gens = [G.element_by_name(f"s{i}") for i in range(1, n + 1)]
        eps = G.mul(gens[0], gens[0])
        assert all(G.mul(s, s) == eps for s in gens)
        assert G.element_order(eps) == 2
        assert all(G.mul(eps, g) == G.mul(g, eps) for g in range(G.order))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_normal_form_model(self, n):
        # the cocycle model is an independent realization; the generator map
        # s_i -> (0, e_i) must extend to an isomorphism
        G, _ = h_group(n)
        model = pairwise_inverting_model(n)
        gens = [G.element_by_name(f"s{i}") for i in range(1, n + 1)]
        images = [1 << (i) for i in range(n)]
        assert extend_generator_map(G, gens, model, images) is not None

    def test_range_validation(self):
        with pytest.raises(MalformedInputError):
            h_group(1)
        with pytest.raises(MalformedInputError):
            h_group(9)
