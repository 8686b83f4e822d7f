import pytest

from manyrobbers import pursuit, zerovis
from manyrobbers.errors import StateSpaceCapError
from manyrobbers.families import (caterpillar, complete, complete_bipartite,
                                  cycle, h_graph, path, star, subdivided_star,
                                  wheel)
from manyrobbers.reference import brute_force_zero_vis, clearing_round_of_walk
from manyrobbers.values import ROBBERS_WIN, is_finite
from manyrobbers.zerovis import (VERDICT_CONVERGED, VERDICT_DIVERGENCE,
                                 VERDICT_NOT_COP_WIN, extract_schedule,
                                 is_strong_k_cop_win, limit_probe, probe_csv,
                                 zero_vis_capture_time, zero_vis_cop_number)


class TestCaptureTimes:
    @pytest.mark.parametrize("graph,k,want", [
        (path(4), 1, 3),
        (wheel(6), 2, 3),
        (complete(4), 2, 1),
        (complete_bipartite(2, 5), 2, 4),
        (cycle(5), 2, 2),
        (cycle(7), 2, 3),
    ])
    def test_examples(self, graph, k, want):
        assert zero_vis_capture_time(graph, k) == want

    def test_unclearable(self):
        assert zero_vis_capture_time(cycle(5), 1) == ROBBERS_WIN

    # the walk oracle pins the star value: a blind cop starting on a leaf
    # clears K_{1,n} in 2n-2 rounds, and no shorter walk exists
    @pytest.mark.parametrize("n,want", [(2, 2), (3, 4), (4, 6)])
    def test_stars_against_walk_oracle(self, n, want):
        g = star(n)
        assert zero_vis_capture_time(g, 1) == want
        assert brute_force_zero_vis(g, 1, want + 1) == want

    @pytest.mark.parametrize("graph,k,horizon", [
        (path(4), 1, 5), (path(5), 1, 6), (cycle(4), 2, 3),
        (complete(5), 3, 3), (complete_bipartite(2, 3), 2, 4),
    ])
    def test_walk_oracle_agreement(self, graph, k, horizon):
        assert zero_vis_capture_time(graph, k) == \
            brute_force_zero_vis(graph, k, horizon)


class TestCopNumbers:
    @pytest.mark.parametrize("graph,want", [
        (path(6), 1), (complete(6), 3), (cycle(5), 2),
        (complete_bipartite(2, 4), 2), (wheel(7), 2), (subdivided_star(3), 2),
        (complete(2), 1), (star(5), 1),
    ])
    def test_examples(self, graph, want):
        assert zero_vis_cop_number(graph) == want

    def test_blind_cops_never_beat_sighted_ones(self, corpus5):
        for g in corpus5:
            assert zero_vis_cop_number(g) >= pursuit.cop_number(g)


class TestStrongCopWin:
    def test_caterpillars_are_strong_cop_win(self):
        assert is_strong_k_cop_win(caterpillar(3, [1, 2, 0]), 1)
        assert is_strong_k_cop_win(path(7), 1)

    def test_subdivided_star_is_not(self):
        assert not is_strong_k_cop_win(subdivided_star(3), 1)
        assert is_strong_k_cop_win(subdivided_star(3), 2)

    def test_hgraph_is_not(self):
        assert not is_strong_k_cop_win(h_graph(10), 1)


class TestSchedules:
    def test_path_sweep_schedule(self):
        # canonical witness: an end-to-end sweep in three rounds
        assert extract_schedule(path(4), 1) == [(3,), (2,), (1,), (0,)]

    def test_star_schedule_length(self):
        sched = extract_schedule(star(3), 1)
        assert len(sched) - 1 == zero_vis_capture_time(star(3), 1) == 4

    @pytest.mark.parametrize("graph,k", [
        (path(5), 1), (star(4), 1), (wheel(6), 2), (cycle(7), 2),
        (caterpillar(3, [0, 2, 0]), 1), (complete_bipartite(2, 5), 2),
    ])
    def test_schedule_clears_in_exactly_the_reported_time(self, graph, k):
        sched = extract_schedule(graph, k)
        t = zero_vis_capture_time(graph, k)
        assert len(sched) - 1 == t
        assert clearing_round_of_walk(graph, sched) == t

    def test_schedule_replay_captures_all_robbers(self):
        # replaying the blind walk under full information kills any number
        # of robbers within the schedule length
        from manyrobbers import strategies as st
        g = wheel(6)
        sched = extract_schedule(g, 2)

        cop = st.CopScript(
            name="fixed_walk", applies=lambda graph: True,
            place=lambda graph: sched[0],
            move=lambda graph, rnd, cops, robbers, history:
                st._align(graph, cops, sched[min(rnd, len(sched) - 1)]))
        game = pursuit.solve(g, 2, 6)
        tr = st.arena(g, cop, st.solver_optimal_robbers(game), 6,
                      len(sched) + 4)
        assert tr.outcome == "captured_all"
        assert tr.end_round <= len(sched) - 1

    def test_unclearable_raises(self):
        with pytest.raises(ValueError):
            extract_schedule(cycle(6), 1)

    def test_backends_produce_identical_schedules(self):
        from manyrobbers import _backend
        try:
            results = {}
            for name in ("numba", "numpy"):
                _backend.set_backend(name)
                zerovis.clear_caches()
                results[name] = (extract_schedule(star(4), 1),
                                 extract_schedule(wheel(6), 2))
            assert results["numba"] == results["numpy"]
        finally:
            _backend.set_backend("auto")
            zerovis.clear_caches()


class TestLimitProbe:
    def test_path_converges_quickly(self):
        rep = limit_probe(path(4), 1, 8)
        assert rep.verdict == VERDICT_CONVERGED
        assert rep.limit == 3 and rep.sequence[-1] == 3
        assert len(rep.sequence) <= 3

    def test_cycle_with_two_cops(self):
        rep = limit_probe(cycle(5), 2, 8)
        assert rep.verdict == VERDICT_CONVERGED and rep.limit == 2

    def test_subdivided_star_diverges(self):
        rep = limit_probe(subdivided_star(3), 1, 8)
        assert rep.verdict == VERDICT_DIVERGENCE
        assert rep.sequence == [2, 6, 8, 10, 10, 12, 12, 14]
        assert rep.zero_vis_time == ROBBERS_WIN

    def test_not_cop_win(self):
        rep = limit_probe(cycle(4), 1, 5)
        assert rep.verdict == VERDICT_NOT_COP_WIN
        assert rep.sequence == [ROBBERS_WIN]

    def test_sequences_are_nondecreasing_and_bounded(self, corpus5):
        for g in corpus5[::3]:
            for k in (1, 2):
                rep = limit_probe(g, k, 6)
                finite = [v for v in rep.sequence if is_finite(v)]
                assert finite == sorted(finite)
                if is_finite(rep.zero_vis_time):
                    assert all(v <= rep.zero_vis_time for v in finite)

    def test_csv_emission(self):
        rep = limit_probe(path(3), 1, 4)
        text = probe_csv(rep)
        assert text.splitlines()[0] == "m,capture_time"
        assert text.splitlines()[1] == "1,1"


class TestCaps:
    def test_state_cap_formula(self):
        with pytest.raises(StateSpaceCapError):
            zerovis.ClearingGame(path(8), 2, cap_states=1000)
