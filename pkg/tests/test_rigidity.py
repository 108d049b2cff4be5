import pytest

from cayleyaut import (
    MalformedInputError,
    StructureCase,
    abelian,
    cayley_index_search,
    cyclic,
    full_genset,
    h_group,
    index_of,
    make_genset,
    optimality_example_h,
    optimality_example_k,
    optimality_example_product,
    optimality_example_q8,
    q8_boolean_family,
    run_example,
    verify_quantitative,
)


class TestIndexOf:
    def test_five_cycle(self):
        S = make_genset(cyclic(5), [1], symmetrize=True)
        rep = index_of(S)
        assert rep.full_aut_order == 10
        assert rep.cayley_index == 2
        assert rep.colour_index == 2

    def test_complete_graph_k5(self):
        rep = index_of(full_genset(cyclic(5)))
        assert rep.full_aut_order == 120
        assert rep.cayley_index == 24
        assert rep.colour_index == 2

    def test_k2(self):
        rep = index_of(make_genset(cyclic(2), [1]))
        assert rep.cayley_index == 1

    def test_json_columns(self):
        rep = index_of(make_genset(cyclic(4), [1], symmetrize=True))
        data = rep.to_json_dict()
        assert set(data) == {
            "group",
            "group_digest",
            "genset",
            "set_size",
            "full_aut_order",
            "colour_aut_order",
            "cayley_index",
            "colour_index",
        }


class TestSearch:
    def test_cyclic5(self):
        res = cayley_index_search(cyclic(5))
        assert res.best_index == 2
        assert res.exhaustive
        assert res.sets_examined == 3  # {1,4}, {2,3}, and their union

    def test_klein_four_cycle_beats_k4(self):
        res = cayley_index_search(abelian([2, 2]))
        assert res.best_index == 2
        assert len(res.witness_genset) == 2  # a 4-cycle, not K4 (index 6)

    def test_z2(self):
        res = cayley_index_search(cyclic(2))
        assert res.best_index == 1 and res.exhaustive

    def test_budget_flags_incomplete(self):
        res = cayley_index_search(cyclic(6), budget=2)
        assert not res.exhaustive
        assert res.sets_examined == 2

    def test_exhaustive_rejected_above_16(self):
        with pytest.raises(MalformedInputError):
            cayley_index_search(cyclic(18), exhaustive=True)

    def test_sampled_mode_deterministic(self):
        G = cyclic(18)
        r1 = cayley_index_search(G, budget=12, seed=5)
        r2 = cayley_index_search(G, budget=12, seed=5)
        assert (r1.best_index, r1.witness_genset) == (r2.best_index, r2.witness_genset)
        assert r1.seed == 5 and not r1.exhaustive


class TestVerifyQuantitative:
    def test_z6(self):
        G = cyclic(6)
        rep = verify_quantitative(G, make_genset(G, [1], symmetrize=True))
        assert rep.case is StructureCase.ABELIAN_ORDER_GE3
        assert rep.radius == 2
        assert rep.passed and rep.ball_stab_order == 2

    def test_q8z2_twisted(self):
        G, S = q8_boolean_family(1)
        rep = verify_quantitative(G, S)
        assert rep.case is StructureCase.Q8_TIMES_BOOLEAN
        assert rep.radius == 3
        assert rep.passed and rep.ball_stab_order == 8

    def test_h4(self):
        G, S = h_group(4)
        rep = verify_quantitative(G, S)
        assert rep.case is StructureCase.NEITHER
        assert rep.radius == 3
        assert rep.passed and rep.ball_stab_order == 1

    def test_boolean_radius_1(self):
        G = abelian([2, 2, 2])
        gens = [G.element_by_name(n) for n in ("(1,0,0)", "(0,1,0)", "(0,0,1)")]
        rep = verify_quantitative(G, make_genset(G, gens))
        assert rep.radius == 1 and rep.passed


class TestProductExample:
    @pytest.mark.parametrize("m,n", [(3, 3), (3, 4), (4, 5)])
    def test_family(self, m, n):
        rep = optimality_example_product(m, n)
        assert rep.passed, rep.checks
        assert rep.details["radius1_order"] >= 4
        assert rep.details["radius2_order"] == 2

    def test_rejects_small_factors(self):
        with pytest.raises(MalformedInputError):
            optimality_example_product(2, 5)


class TestQ8Example:
    @pytest.mark.parametrize("n", [1, 2])
    def test_family(self, n):
        rep = optimality_example_q8(n)
        assert rep.passed, rep.checks
        assert rep.details["radius2_order"] > 8

    def test_n1_includes_radius3_exclusion(self):
        rep = optimality_example_q8(1)
        assert rep.checks["mixed_map_not_in_radius3_stabilizer"]
        assert rep.details["radius3_order"] == 8

    def test_rejects_out_of_range(self):
        with pytest.raises(MalformedInputError):
            optimality_example_q8(0)
        with pytest.raises(MalformedInputError):
            optimality_example_q8(5)


class TestHExample:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_family(self, n):
        rep = optimality_example_h(n)
        assert rep.passed, rep.checks

    def test_n4_trivial_radius3(self):
        rep = optimality_example_h(4)
        assert rep.checks["radius3_stabilizer_trivial"]
        assert rep.checks["inversion_shows_radius2_insufficient"]

    def test_rejects_out_of_range(self):
        with pytest.raises(MalformedInputError):
            optimality_example_h(1)


class TestKExample:
    @pytest.mark.parametrize("n", [1, 2])
    def test_family(self, n):
        rep = optimality_example_k(n)
        assert rep.passed, rep.checks

    def test_rejects_out_of_range(self):
        with pytest.raises(MalformedInputError):
            optimality_example_k(0)


class TestRunExample:
    def test_dispatch(self):
        assert run_example("product:3,3").passed
        assert run_example("h:2").passed

    def test_bad_names(self):
        with pytest.raises(MalformedInputError):
            run_example("nope:1")
        with pytest.raises(MalformedInputError):
            run_example("product")
        with pytest.raises(MalformedInputError):
            run_example("q8:x")
