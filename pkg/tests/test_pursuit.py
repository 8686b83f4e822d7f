import numpy as np
import pytest
from hypothesis import given, strategies as st

from manyrobbers import pursuit
from manyrobbers.errors import StateSpaceCapError
from manyrobbers.families import (complete, cycle, h_graph, h_vertex, path,
                                  star, subdivided_star, wheel)
from manyrobbers.pursuit import (bound_2dismantlable, bound_diameter,
                                 bound_general, bound_tree, capture_time,
                                 capture_time_from, cop_number,
                                 d_to_set_over_traps, extract_cop_strategy,
                                 solve, w_set, z_set)
from manyrobbers.reference import brute_force_capture_time, brute_force_tables
from manyrobbers.values import ROBBERS_WIN, is_finite

from conftest import random_connected_graph


@st.composite
def graphs(draw, max_n=6):
    return random_connected_graph(draw, max_n=max_n)


class TestPositionValues:
    def test_single_step_capture(self):
        game = solve(complete(2), 1, 1)
        assert game.value((0,), (1,)) == 1

    def test_cycle_is_robbers_win(self):
        game = solve(cycle(4), 1, 1)
        assert game.value((0,), (2,)) == ROBBERS_WIN
        assert game.value((0,), (1,)) == 1  # adjacent robber still falls

    def test_stacked_robbers_on_a_path(self):
        game = solve(path(3), 1, 2)
        assert game.value((0,), (2, 2)) == 2

    def test_normalization_removes_co_located(self):
        game = solve(path(3), 1, 2)
        assert game.value((1,), (1, 2)) == game.value((1,), (2,))
        assert game.value((1,), (1, 1)) == 0

    def test_strict_capture_accounting(self):
        # a game ending on the cop move in round r reports r, never r + 1
        assert solve(complete(2), 1, 1).value((0,), (1,)) == 1
        assert solve(path(3), 1, 2).value((1,), (0, 2)) == 3


class TestCaptureTime:
    @pytest.mark.parametrize("n,m,want", [(5, 2, 4), (5, 3, 4), (2, 2, 1)])
    def test_paths(self, n, m, want):
        assert capture_time(path(n), 1, m) == want

    def test_complete(self):
        assert capture_time(complete(5), 1, 3) == 3

    def test_subdivided_star(self):
        assert capture_time(subdivided_star(3), 1, 2) == 6

    @pytest.mark.parametrize("n,want", [(7, 3), (8, 4), (10, 6)])
    def test_hgraph_single_robber(self, n, want):
        assert capture_time(h_graph(n), 1, 1) == want

    def test_hgraph_many_robbers(self):
        assert capture_time(h_graph(10), 1, 2) == 14
        assert capture_time(h_graph(10), 1, 3) == 22

    def test_robbers_win(self):
        assert capture_time(cycle(4), 1, 1) == ROBBERS_WIN
        assert capture_time(cycle(4), 1, 3) == ROBBERS_WIN

    def test_cops_cover_everything(self):
        assert capture_time(complete(2), 2, 3) == 0


class TestCaptureTimeFrom:
    def test_path_endpoint(self):
        assert capture_time_from(path(4), (0,), 1) == 3

    def test_hgraph_start_vertices(self):
        g = h_graph(7)
        assert capture_time_from(g, (h_vertex(1),), 1) <= 3
        assert capture_time_from(g, (h_vertex(2),), 1) <= 3
        assert capture_time_from(g, (h_vertex(5),), 1) >= 4


class TestCopNumber:
    @pytest.mark.parametrize("graph,want", [
        (path(7), 1), (cycle(5), 2), (complete(4), 1), (cycle(4), 2),
        (wheel(6), 1),
    ])
    def test_examples(self, graph, want):
        assert cop_number(graph) == want

    def test_matches_dismantlability(self, corpus):
        # classic cross-solver check: one cop wins iff the graph dismantles
        for g in corpus:
            assert (cop_number(g) == 1) == g.is_dismantlable()


class TestThresholdSets:
    def test_z_sets_of_hgraphs(self):
        for n in (7, 8, 9, 10):
            assert z_set(h_graph(n)) == {h_vertex(1), h_vertex(2)}

    def test_w_set_contains_path_centers(self):
        assert {2, 3} <= w_set(path(6))

    def test_z_set_needs_seven_vertices(self):
        with pytest.raises(ValueError):
            z_set(path(5))

    def test_threshold_sets_need_cop_win(self):
        with pytest.raises(ValueError):
            w_set(cycle(5))


class TestTrapDistances:
    def test_examples(self):
        assert d_to_set_over_traps(path(5), {0}) == 4
        assert d_to_set_over_traps(complete(5), {0}) == 1
        assert d_to_set_over_traps(h_graph(10), z_set(h_graph(10))) == 2

    def test_errors(self):
        with pytest.raises(ValueError):
            d_to_set_over_traps(cycle(5), {0})
        with pytest.raises(ValueError):
            d_to_set_over_traps(path(5), set())


class TestBounds:
    def test_general_bound_tight_on_h10(self):
        rep = bound_general(h_graph(10), 3)
        assert rep.hypotheses_met and rep.bound == 22
        assert rep.measured == 22 and rep.holds

    def test_tree_bound_tight_on_subdivided_star(self):
        rep = bound_tree(subdivided_star(3), 2)
        assert rep.bound == 6 and rep.measured == 6 and rep.holds

    def test_two_dismantlable_bound_on_p8(self):
        rep = bound_2dismantlable(path(8), 2)
        assert rep.hypotheses_met and rep.holds
        assert rep.measured == 7    # the exact path value

    def test_diameter_bound_holds_on_h7(self):
        rep = bound_diameter(h_graph(7), 2)
        assert rep.hypotheses_met and rep.holds

    def test_hypothesis_violations_are_flagged_not_raised(self):
        rep = bound_general(cycle(4), 2)
        assert not rep.hypotheses_met
        assert rep.bound is None and rep.holds is None
        rep = bound_tree(star(2), 5)    # more robbers than leaves
        assert not rep.hypotheses_met


class TestStrategyExtraction:
    def test_triangle_policy_captures_immediately(self):
        policy = extract_cop_strategy(complete(3), 1, 1)
        assert policy.move((0,), (2,)) == (2,)

    def test_lexicographically_least_optimal_start(self):
        policy = extract_cop_strategy(h_graph(10), 1, 3)
        assert policy.place() == (h_vertex(1),)

    def test_robbers_win_graph_rejected(self):
        with pytest.raises(ValueError):
            extract_cop_strategy(cycle(4), 1, 1)


class TestOracleEquivalence:
    @pytest.mark.parametrize("graph,k,m", [
        (path(4), 1, 2), (cycle(5), 1, 2), (cycle(5), 2, 2),
        (star(3), 1, 3), (wheel(5), 1, 2), (complete(4), 2, 2),
    ])
    def test_capture_times_match(self, graph, k, m):
        assert capture_time(graph, k, m) == \
            brute_force_capture_time(graph, k, m)

    @pytest.mark.parametrize("graph", [path(6), cycle(6), wheel(5), h_graph(7)])
    def test_value_tables_match_single_robber(self, graph):
        game = solve(graph, 1, 1)
        vc, vr = brute_force_tables(graph, 1, 1)
        for (c, r), want in vc.items():
            got = game.value(c, r)
            assert got == (ROBBERS_WIN if want == float("inf") else want)
        for (c, r), want in vr.items():
            got = game.value(c, r, turn=pursuit.ROBBERS_TO_MOVE)
            assert got == (ROBBERS_WIN if want == float("inf") else want)

    @given(graphs(max_n=5))
    def test_random_graphs_match_oracle(self, g):
        assert capture_time(g, 1, 1) == brute_force_capture_time(g, 1, 1)

    def test_whole_corpus_matches_oracle_single_robber(self, corpus):
        for g in corpus:
            assert capture_time(g, 1, 1) == brute_force_capture_time(g, 1, 1)


class TestMonotonicity:
    @given(graphs(max_n=6))
    def test_monotone_in_robbers_and_cops(self, g):
        g1 = solve(g, 1, 3)
        g2 = solve(g, 2, 3)
        v1 = [g1.capture_time_for(m) for m in (1, 2, 3)]
        v2 = [g2.capture_time_for(m) for m in (1, 2, 3)]
        assert v1[0] <= v1[1] <= v1[2]
        assert v2[0] <= v2[1] <= v2[2]
        for a, b in zip(v2, v1):
            assert a <= b
        # one winnability verdict for every robber count
        assert len({is_finite(v) for v in v1}) == 1

    @given(graphs(max_n=6))
    def test_retract_monotonicity(self, g):
        for u in sorted(g.traps()):
            if g.n <= 2:
                continue
            retract, _ = g.one_point_retract(u)
            for k, m in ((1, 1), (1, 2), (2, 2)):
                assert capture_time(retract, k, m) <= capture_time(g, k, m)


class TestCapsAndErrors:
    def test_position_cap(self):
        with pytest.raises(StateSpaceCapError) as err:
            pursuit.PursuitGame(path(6), 2, 4, cap_positions=100)
        assert err.value.required > 100

    def test_move_budget(self):
        with pytest.raises(StateSpaceCapError):
            pursuit.PursuitGame(wheel(5), 1, 8, move_budget=1000)

    def test_bad_team_sizes(self):
        with pytest.raises(ValueError):
            pursuit.PursuitGame(path(3), 0, 1)


def test_value_table_backends_agree():
    from manyrobbers import _kernels_numba, _kernels_numpy
    g = wheel(5)
    game = solve(g, 1, 4)
    args = (game.cops.move_ptr, game.cops.move_dat, game.cap,
            game.robbers.size_of, game.m,
            game.move_ptr, game.move_dat, game.complete)
    for mod in (_kernels_numba, _kernels_numpy):
        vc, vr = mod.pursuit_retrograde(*args)
        assert np.array_equal(vc, game.value_cop)
        assert np.array_equal(vr, game.value_rob)
