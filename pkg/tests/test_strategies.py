import json
import random

import pytest

from manyrobbers import pursuit, strategies as st
from manyrobbers.errors import IllegalMoveError
from manyrobbers.families import (bipartition, caterpillar, complete,
                                  complete_bipartite, cycle, h_graph,
                                  h_vertex, path, star, wheel)


def fixed_cop(positions):
    """Cop script following a fixed list of configurations."""
    return st.CopScript(
        name="fixed", applies=lambda g: True,
        place=lambda g: positions[0],
        move=lambda g, rnd, cops, robbers, history:
            positions[min(rnd, len(positions) - 1)])


def fixed_robbers(start, moves):
    return st.RobberScript(
        name="fixed", applies=lambda g, m: True,
        place=lambda g, cops, m: start,
        move=lambda g, rnd, cops, robbers, history:
            moves[min(rnd - 1, len(moves) - 1)])


class TestArenaSemantics:
    def test_round_zero_placement_capture(self):
        tr = st.arena(path(3), fixed_cop([(0,)]),
                      fixed_robbers((0, 2), [(2,)]), 2, 5)
        assert tr.rounds[0].captured == (0,)
        assert tr.rounds[0].robbers == (2,)

    def test_capture_on_the_robber_move(self):
        # the robber walks onto the standing cop and is removed that round
        tr = st.arena(path(2), fixed_cop([(0,), (0,)]),
                      fixed_robbers((1,), [(0,)]), 1, 5)
        assert tr.outcome == "captured_all" and tr.end_round == 1

    def test_hand_scripted_path_trace(self):
        # cop mid-path against robbers parked on both ends: rounds 1 and 3
        tr = st.arena(path(3), fixed_cop([(1,), (0,), (1,), (2,)]),
                      fixed_robbers((0, 2), [(2,)]), 2, 6)
        assert tr.outcome == "captured_all" and tr.end_round == 3
        assert tr.rounds[1].captured == (0,)
        assert tr.rounds[3].captured == (2,)

    def test_illegal_cop_move_reported(self):
        with pytest.raises(IllegalMoveError) as err:
            st.arena(path(4), fixed_cop([(0,), (2,)]),
                     fixed_robbers((3,), [(3,)]), 1, 5)
        assert err.value.round_index == 1
        assert "cop" in err.value.offender

    def test_illegal_robber_move_reported(self):
        with pytest.raises(IllegalMoveError) as err:
            st.arena(path(4), fixed_cop([(0,), (0,)]),
                     fixed_robbers((3,), [(1,)]), 1, 5)
        assert "robber" in err.value.offender

    def test_horizon_truncation(self):
        tr = st.arena(cycle(4), fixed_cop([(0,)] * 4),
                      fixed_robbers((2,), [(2,)]), 1, 3)
        assert tr.outcome == "horizon" and tr.end_round is None

    def test_transcript_json_lines(self):
        tr = st.arena(path(2), fixed_cop([(0,), (1,)]),
                      fixed_robbers((1,), [(1,)]), 1, 3)
        lines = tr.to_json_lines().strip().splitlines()
        records = [json.loads(x) for x in lines]
        assert records[0]["round"] == 0
        assert records[-1]["outcome"] == "captured_all"
        assert records[-1]["end_round"] == 1


class TestSweepScripts:
    @pytest.mark.parametrize("graph,script,k,m,bound", [
        (path(5), st.path_sweep(), 1, 2, 4),
        (star(4), st.star_sweep(), 1, 6, 7),
        (caterpillar(3, [0, 2, 0]), st.caterpillar_sweep(), 1, 6, 7),
        (cycle(7), st.cycle_two_cop_sweep(), 2, 6, 3),
        (wheel(6), st.wheel_two_cop_sweep(), 2, 8, 3),
        (complete_bipartite(2, 5), st.bipartite_sweep(bipartition(2, 5)),
         2, 7, 4),
    ])
    def test_claimed_bounds_against_optimal_robbers(self, graph, script, k, m,
                                                    bound):
        game = pursuit.solve(graph, k, m)
        tr = st.arena(graph, script, st.solver_optimal_robbers(game), m,
                      bound + 10)
        assert tr.outcome == "captured_all"
        assert tr.end_round <= bound

    def test_path_sweep_against_parked_robbers(self):
        tr = st.arena(path(5), st.path_sweep(), st.stand_still_far_end(),
                      2, 10)
        assert tr.end_round == 4

    def test_wheel_sweep_against_spread(self):
        tr = st.arena(wheel(6), st.wheel_two_cop_sweep(),
                      st.adversarial_spread(), 8, 20)
        assert tr.outcome == "captured_all" and tr.end_round <= 3

    def test_applicability_is_checked(self):
        with pytest.raises(ValueError):
            st.arena(cycle(5), st.path_sweep(), st.stand_still_far_end(),
                     1, 5)


def random_robbers(seed):
    rng = random.Random(seed)

    def move(g, rnd, cops, robbers, history):
        return tuple(rng.choice(sorted(g.closed_neighborhood(v)))
                     for v in robbers)

    def place(g, cops, m):
        return tuple(rng.choice(range(g.n)) for _ in range(m))

    return st.RobberScript(name=f"random{seed}",
                           applies=lambda g, m: True, place=place, move=move)


class TestScriptLegality:
    # the arena validates every emitted move, so surviving a fuzzed replay
    # certifies the script never plays an illegal step
    @pytest.mark.parametrize("seed", range(4))
    def test_sweeps_stay_legal_under_fuzz(self, seed):
        cases = [
            (path(6), st.path_sweep(), 1, 3),
            (star(5), st.star_sweep(), 1, 4),
            (caterpillar(4, [1, 0, 2, 0]), st.caterpillar_sweep(), 1, 3),
            (cycle(6), st.cycle_two_cop_sweep(), 2, 4),
            (wheel(7), st.wheel_two_cop_sweep(), 2, 4),
            (complete_bipartite(3, 4), st.bipartite_sweep(bipartition(3, 4)),
             3, 5),
        ]
        for graph, script, k, m in cases:
            st.arena(graph, script, random_robbers(seed), m, 25)

    @pytest.mark.parametrize("seed", range(3))
    def test_hn_scripts_stay_legal_under_fuzz(self, seed):
        st.arena(h_graph(9), st.hn_cop_from_vertex2(), random_robbers(seed),
                 1, 25)


class TestReactionTables:
    def test_chase_table_rows(self):
        assert st.HN_COP_CHASE == {-4: +4, -3: +1, -1: +3, 0: +4,
                                   +1: +1, +3: +3, +4: +4}

    def test_realignment_table_rows(self):
        assert st.HN_COP_REALIGN == {-4: 4, -3: 5, -1: 3, 0: 4,
                                     +1: 5, +3: 3, +4: 4}

    def test_dodge_table_rows(self):
        assert st.HN_ROBBER_DODGE == {-4: +1, -3: -1, -1: -3,
                                      +1: -4, +3: -4, +4: -4}

    def test_chase_script_applies_table_rows(self):
        # cop on label 5, robber stepped 9 -> 8 (delta -1): table says +3
        g = h_graph(10)
        script = st.hn_cop_from_vertex2()
        script.reset()
        history = [((h_vertex(2),), (h_vertex(9),)),
                   ((h_vertex(5),), (h_vertex(8),))]
        move = script.move(g, 2, (h_vertex(5),), (h_vertex(8),), history)
        assert move == (h_vertex(8),)   # 5 + 3

    def test_chase_script_round_one_alignment(self):
        g = h_graph(10)
        script = st.hn_cop_from_vertex2()
        script.reset()
        history = [((h_vertex(2),), (h_vertex(9),))]
        # robber starts on 9 (residue 1): the cop aligns on label 5
        move = script.move(g, 1, (h_vertex(2),), (h_vertex(9),), history)
        assert move == (h_vertex(5),)


class TestHnChase:
    @pytest.mark.parametrize("n", [7, 9, 10])
    def test_captures_within_the_budget(self, n):
        g = h_graph(n)
        game = pursuit.solve(g, 1, 1)
        tr = st.arena(g, st.hn_cop_from_vertex2(),
                      st.solver_optimal_robbers(game), 1, 2 * n)
        assert tr.outcome == "captured_all"
        assert tr.end_round <= n - 4


class TestHnSquad:
    def test_three_robbers_survive_the_proven_bound(self):
        g = h_graph(10)
        game = pursuit.solve(g, 1, 3)
        tr = st.arena(g, st.solver_optimal_cop(game), st.hn_robbers_squad(3),
                      3, 40)
        assert tr.end_round is not None and tr.end_round >= 22

    def test_two_robbers_survive_the_proven_bound(self):
        g = h_graph(10)
        game = pursuit.solve(g, 1, 2)
        tr = st.arena(g, st.solver_optimal_cop(game), st.hn_robbers_squad(2),
                      2, 40)
        assert tr.end_round is not None and tr.end_round >= 14

    def test_squad_checks_applicability(self):
        with pytest.raises(ValueError):
            st.arena(h_graph(9), st.solver_optimal_cop(
                pursuit.solve(h_graph(9), 1, 3)), st.hn_robbers_squad(3),
                3, 40)


class TestReplayConsistency:
    @pytest.mark.parametrize("graph,k,m", [
        (path(5), 1, 2), (wheel(5), 1, 3), (cycle(6), 2, 2),
        (complete(4), 2, 3), (h_graph(7), 1, 2),
    ])
    def test_optimal_play_reproduces_capture_time(self, graph, k, m):
        game = pursuit.solve(graph, k, m)
        ct = game.capture_time()
        tr = st.arena(graph, st.solver_optimal_cop(game),
                      st.solver_optimal_robbers(game), m, int(ct) + 5)
        assert tr.end_round == ct
