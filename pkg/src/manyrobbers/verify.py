"""The theorem-to-test battery behind ``manyrobbers verify``.

Each suite checks one block of exact claims about capture times, cop
numbers, bounds, limits, or scripted strategies on desk-scale graphs.  A
claim is a falsifiable statement with a formula in its text; the battery
reports one pass/fail line per claim and the CLI exits nonzero when any
claim fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from . import pursuit, strategies, zerovis
from .families import (caterpillar, complete, complete_bipartite, cycle,
                       bipartition, h_graph, path, star, subdivided_star,
                       wheel)
from .graphs import Graph
from .reference import brute_force_capture_time, clearing_round_of_walk
from .smallgraphs import connected_graphs_up_to, trees_up_to
from .values import is_finite, value_to_json


@dataclass
class ClaimResult:
    suite: str
    claim: str
    statement: str
    passed: bool
    details: str

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f" [{self.details}]" if self.details else ""
        return f"{mark} {self.suite}/{self.claim}: {self.statement}{tail}"

    def to_json(self) -> dict:
        return {"suite": self.suite, "claim": self.claim,
                "statement": self.statement, "passed": self.passed,
                "details": self.details}


def _claim(suite, claim, statement, passed, details="") -> ClaimResult:
    return ClaimResult(suite, claim, statement, bool(passed), details)


def _mismatch_note(mismatches, limit=4) -> str:
    if not mismatches:
        return ""
    shown = "; ".join(str(x) for x in mismatches[:limit])
    more = f" (+{len(mismatches) - limit} more)" if len(mismatches) > limit else ""
    return shown + more


# -- suite: exact capture-time formulas ------------------------------------------

def suite_formulas() -> list[ClaimResult]:
    out = []

    bad = []
    for n in range(2, 9):
        for m in (2, 3):
            got = pursuit.capture_time(path(n), 1, m)
            if got != n - 1:
                bad.append(f"P{n},m={m}: {value_to_json(got)}")
    out.append(_claim("formulas", "paths", "capt(P_n, m) = n-1 for n=2..8, m=2,3",
                      not bad, _mismatch_note(bad)))

    bad = []
    for n in range(3, 7):
        for m in range(1, n):
            got = pursuit.capture_time(complete(n), 1, m)
            if got != m:
                bad.append(f"K{n},m={m}: {value_to_json(got)}")
    out.append(_claim("formulas", "complete", "capt(K_n, m) = m for n=3..6, m<n",
                      not bad, _mismatch_note(bad)))

    bad = []
    for m in (1, 2, 3):
        got = pursuit.capture_time(subdivided_star(m + 1), 1, m)
        if got != 4 * m - 2:
            bad.append(f"T{m + 1},m={m}: {value_to_json(got)}")
    out.append(_claim("formulas", "subdivided-stars",
                      "capt(T_{m+1}, m) = 4m-2 for m=1..3",
                      not bad, _mismatch_note(bad)))
    return out


# -- suite: the maximum-capture-time family --------------------------------------

def suite_hn() -> list[ClaimResult]:
    out = []

    bad = []
    for n in range(7, 11):
        got = pursuit.capture_time(h_graph(n), 1, 1)
        if got != n - 4:
            bad.append(f"H{n}: {value_to_json(got)}")
    out.append(_claim("hn", "single-robber", "capt(H(n), 1) = n-4 for n=7..10",
                      not bad, _mismatch_note(bad)))

    bad = []
    for n in range(7, 11):
        got = sorted(pursuit.z_set(h_graph(n)))
        if got != [0, 1]:
            bad.append(f"H{n}: {got}")
    out.append(_claim("hn", "z-set",
                      "Z(H(n)) = labels {1,2} for n=7..10", not bad,
                      _mismatch_note(bad)))

    got2 = pursuit.capture_time(h_graph(10), 1, 2)
    got3 = pursuit.capture_time(h_graph(10), 1, 3)
    out.append(_claim("hn", "two-robbers", "capt(H(10), 2) = l+2(n-4) = 14",
                      got2 == 14, f"got {value_to_json(got2)}"))
    out.append(_claim("hn", "three-robbers", "capt(H(10), 3) = 2l+3(n-4) = 22",
                      got3 == 22, f"got {value_to_json(got3)}"))

    dz = pursuit.d_to_set_over_traps(h_graph(10), pursuit.z_set(h_graph(10)))
    out.append(_claim("hn", "trap-distance", "d_Z(H(10)) = 2", dz == 2,
                      f"got {dz}"))
    return out


# -- suite: inequality bounds ------------------------------------------------------

def _bounds_corpus() -> list[Graph]:
    return list(connected_graphs_up_to(6)) + [path(7), path(8),
                                              h_graph(7), h_graph(8)]


def suite_bounds() -> list[ClaimResult]:
    out = []
    corpus = _bounds_corpus()
    for name, fn, text in [
        ("diameter", pursuit.bound_diameter,
         "capt(G,m) <= (m-1)diam + m(n-4) when cop-win, n >= 7"),
        ("general", pursuit.bound_general,
         "capt(G,m) <= d_Z(m-1) + m(n-4) when cop-win, n >= 7"),
        ("2dismantlable", pursuit.bound_2dismantlable,
         "capt(G,m) <= m*floor(n/2) + (m-1)d_W when 2-dismantlable"),
        ("tree", pursuit.bound_tree,
         "capt(G,m) <= ceil(diam/2) + (m-1)diam for trees, m <= leaves"),
    ]:
        bad = []
        checked = 0
        for g in corpus:
            for m in (1, 2, 3):
                rep = fn(g, m)
                if not rep.hypotheses_met:
                    continue
                checked += 1
                if not rep.holds:
                    bad.append(f"{g.name},m={m}: capt="
                               f"{value_to_json(rep.measured)} > {rep.bound}")
        out.append(_claim("bounds", name, text, not bad,
                          f"{checked} instances" if not bad
                          else _mismatch_note(bad)))
    return out


# -- suite: 0-visibility cop numbers ----------------------------------------------

def suite_zerovis() -> list[ClaimResult]:
    out = []
    checks = [
        ("paths", "c0(P_n) = 1 for n=2..7",
         [(path(n), 1) for n in range(2, 8)]),
        ("cycles", "c0(C_n) = 2 for n=3..7",
         [(cycle(n), 2) for n in range(3, 8)]),
        ("complete", "c0(K_n) = ceil(n/2) for n=2..7",
         [(complete(n), ceil(n / 2)) for n in range(2, 8)]),
        ("bipartite", "c0(K_{m,n}) = m for m <= n <= 5",
         [(complete_bipartite(a, b), a)
          for a in range(1, 6) for b in range(a, 6)]),
        ("wheels", "c0(W_n) = 2 for n=4..7",
         [(wheel(n), 2) for n in range(4, 8)]),
    ]
    for claim, text, cases in checks:
        bad = []
        for g, want in cases:
            got = zerovis.zero_vis_cop_number(g)
            if got != want:
                bad.append(f"{g.name}: c0={got} want {want}")
        out.append(_claim("zerovis", claim, text, not bad, _mismatch_note(bad)))

    bad = []
    for g in trees_up_to(7):
        got = zerovis.zero_vis_cop_number(g)
        want = 1 if g.is_caterpillar() else 2
        if got != want:
            bad.append(f"{g.name}: c0={got} caterpillar={g.is_caterpillar()}")
    out.append(_claim("zerovis", "trees",
                      "trees on <= 7 vertices: c0 = 1 iff caterpillar",
                      not bad, _mismatch_note(bad)))
    return out


# -- suite: limits equal 0-visibility capture times --------------------------------

def _limit_cases():
    cats = [caterpillar(1, [3]), caterpillar(3, [0, 2, 0]),
            caterpillar(3, [1, 0, 2]), caterpillar(4, [0, 1, 1, 0]),
            caterpillar(2, [2, 1])]
    return [
        ("stars", "lim capt(K_{1,n}, m) = 2n-1 for n=2..4",
         [(star(n), 1, 2 * n - 1) for n in range(2, 5)]),
        ("caterpillars", "lim capt(G, m) = n + leaves - 2 on caterpillars",
         [(g, 1, g.n + len(g.leaves()) - 2) for g in cats]),
        ("cycles", "lim capt_2(C_n, m) = floor((n-1)/2) for n=4..7",
         [(cycle(n), 2, (n - 1) // 2) for n in range(4, 8)]),
        ("wheels", "lim capt_2(W_n, m) = n-3 for n=5..7",
         [(wheel(n), 2, n - 3) for n in range(5, 8)]),
        ("complete", "lim capt_2(K_4, m) = 1", [(complete(4), 2, 1)]),
        ("bipartite", "lim capt_2(K_{2,n}, m) = 2*ceil(n/2)-2 for n=3..5",
         [(complete_bipartite(2, n), 2, 2 * ceil(n / 2) - 2)
          for n in range(3, 6)]),
    ]


def suite_limits(max_m: int = 10) -> list[ClaimResult]:
    out = []
    for claim, text, cases in _limit_cases():
        bad = []
        for g, k, want in cases:
            rep = zerovis.limit_probe(g, k, max_m)
            zv = rep.zero_vis_time
            if rep.verdict != zerovis.VERDICT_CONVERGED:
                bad.append(f"{g.name},k={k}: verdict {rep.verdict}, "
                           f"zv={value_to_json(zv)}")
            elif rep.limit != zv or rep.limit != want:
                bad.append(f"{g.name},k={k}: limit={rep.limit} "
                           f"zv={value_to_json(zv)} want {want}")
        out.append(_claim("limits", claim, text, not bad, _mismatch_note(bad)))
    return out


# -- suite: the characterization cross-check ---------------------------------------

_CHARACTERIZATION_CACHE: dict = {}


def characterization_sweep(max_m: int = 10):
    """limit_probe verdicts vs blind cop numbers over the whole corpus."""
    if max_m not in _CHARACTERIZATION_CACHE:
        rows = []
        for g in connected_graphs_up_to(6):
            for k in (1, 2):
                rep = zerovis.limit_probe(g, k, max_m)
                c0 = zerovis.zero_vis_cop_number(g)
                rows.append((g, k, c0, rep))
        _CHARACTERIZATION_CACHE[max_m] = rows
    return _CHARACTERIZATION_CACHE[max_m]


def suite_characterization(max_m: int = 10) -> list[ClaimResult]:
    rows = characterization_sweep(max_m)
    bad_iff = []
    bad_value = []
    for g, k, c0, rep in rows:
        converged = rep.verdict == zerovis.VERDICT_CONVERGED
        if converged != (c0 <= k):
            bad_iff.append(f"{g.name},k={k}: verdict={rep.verdict} c0={c0} "
                           f"seq={[value_to_json(v) for v in rep.sequence]}")
        if converged and rep.limit != rep.zero_vis_time:
            bad_value.append(f"{g.name},k={k}: limit={rep.limit} "
                             f"zv={value_to_json(rep.zero_vis_time)}")
    out = [
        _claim("characterization", "iff",
               f"capt_k(G,m) stabilizes by m={max_m} iff c0(G) <= k, over all "
               "142 connected graphs on <= 6 vertices, k=1,2",
               not bad_iff,
               f"{len(rows)} probes" if not bad_iff else _mismatch_note(bad_iff)),
        _claim("characterization", "limit-value",
               "every converged limit equals the 0-visibility capture time",
               not bad_value, _mismatch_note(bad_value)),
    ]
    return out


# -- suite: monotonicity and structural properties ----------------------------------

def suite_properties() -> list[ClaimResult]:
    out = []
    corpus = list(connected_graphs_up_to(6))

    bad_m = []
    bad_k = []
    bad_fin = []
    for g in corpus:
        per_k = {}
        for k in (1, 2):
            game = pursuit.solve(g, k, 3)
            vals = [game.capture_time_for(m) for m in (1, 2, 3)]
            per_k[k] = vals
            for a, b in zip(vals, vals[1:]):
                if not a <= b:
                    bad_m.append(f"{g.name},k={k}: {vals}")
                    break
            finite = [is_finite(v) for v in vals]
            if len(set(finite)) != 1:
                bad_fin.append(f"{g.name},k={k}: {vals}")
        for m in (1, 2, 3):
            if not per_k[2][m - 1] <= per_k[1][m - 1]:
                bad_k.append(f"{g.name},m={m}")
    out.append(_claim("properties", "monotone-in-m",
                      "capt_k(G,m) is nondecreasing in m (corpus, m=1..3)",
                      not bad_m, _mismatch_note(bad_m)))
    out.append(_claim("properties", "monotone-in-k",
                      "capt_k(G,m) is nonincreasing in k (corpus, k=1,2)",
                      not bad_k, _mismatch_note(bad_k)))
    out.append(_claim("properties", "win-equivalence",
                      "finiteness of capt_k(G,m) does not depend on m (m=1..3)",
                      not bad_fin, _mismatch_note(bad_fin)))

    bad = []
    checked = 0
    for g in corpus:
        for u in sorted(g.traps()):
            if g.n <= 2:
                continue
            retract, _rmap = g.one_point_retract(u)
            for k in (1, 2):
                for m in (1, 2):
                    a = pursuit.capture_time(retract, k, m)
                    b = pursuit.capture_time(g, k, m)
                    checked += 1
                    if not a <= b:
                        bad.append(f"{g.name}-{u},k={k},m={m}: "
                                   f"{value_to_json(a)} > {value_to_json(b)}")
    out.append(_claim("properties", "retract-monotone",
                      "capt_k(G-u, m) <= capt_k(G, m) for every trap u",
                      not bad,
                      f"{checked} instances" if not bad else _mismatch_note(bad)))

    bad = []
    for g in corpus:
        if g.n > 5:
            continue
        a = pursuit.capture_time(g, 1, 1)
        b = brute_force_capture_time(g, 1, 1)
        if a != b:
            bad.append(f"{g.name}: solver={value_to_json(a)} "
                       f"oracle={value_to_json(b)}")
    out.append(_claim("properties", "oracle-equivalence",
                      "solver equals naive minimax on all graphs with n <= 5, "
                      "k=m=1", not bad, _mismatch_note(bad)))
    return out


# -- suite: divergence lower bounds --------------------------------------------------

def suite_divergence() -> list[ClaimResult]:
    out = []

    bad = []
    t3 = subdivided_star(3)
    for m, low in ((2, 6), (4, 10), (8, 14)):
        got = pursuit.capture_time(t3, 1, m)
        if not (is_finite(got) and got >= low):
            bad.append(f"m={m}: {value_to_json(got)} < {low}")
    out.append(_claim("divergence", "subdivided-star",
                      "capt(T_3, m) >= 4l+2 at m = 2^l for l=1..3",
                      not bad, _mismatch_note(bad)))

    w5 = wheel(5)
    base = pursuit.capture_time(w5, 1, 8)
    bad = []
    for ell in (1, 2, 3):
        m = 4 * 2 ** ell
        if m <= 8:
            got = pursuit.capture_time(w5, 1, m)
        else:
            # joint-move enumeration is infeasible at m=16,32; the exact
            # chain capt(W5,m) >= capt(W5,8) (monotone in m) certifies these
            got = base
        if not (is_finite(got) and got >= ell):
            bad.append(f"m={m}: {value_to_json(got)} < {ell}")
    out.append(_claim("divergence", "wheel",
                      "capt(W_5, 4*2^l) >= l for l=1..3 "
                      "(l>=2 via monotonicity from m=8)",
                      not bad,
                      f"capt(W5,8)={value_to_json(base)}" if not bad
                      else _mismatch_note(bad)))

    k4 = complete(4)
    vals = [pursuit.capture_time(k4, 1, m) for m in (3, 9, 27)]
    increasing = all(is_finite(v) for v in vals) and \
        vals[0] < vals[1] < vals[2]
    out.append(_claim("divergence", "complete",
                      "capt(K_4, m) strictly increases along m = 3, 9, 27",
                      increasing,
                      f"values {[value_to_json(v) for v in vals]}"))
    return out


# -- suite: scripted strategies ---------------------------------------------------

def suite_scripts() -> list[ClaimResult]:
    out = []

    sweep_cases = [
        (path(6), strategies.path_sweep(), 1, 3, 5),
        (star(4), strategies.star_sweep(), 1, 6, 7),
        (caterpillar(3, [0, 2, 0]), strategies.caterpillar_sweep(), 1, 6, 7),
        (cycle(7), strategies.cycle_two_cop_sweep(), 2, 6, 3),
        (wheel(6), strategies.wheel_two_cop_sweep(), 2, 8, 3),
        (complete_bipartite(2, 5),
         strategies.bipartite_sweep(bipartition(2, 5)), 2, 7, 4),
    ]
    bad = []
    for g, script, k, m, bound in sweep_cases:
        game = pursuit.solve(g, k, m)
        tr = strategies.arena(g, script, strategies.solver_optimal_robbers(game),
                              m, bound + 10)
        if tr.outcome != "captured_all" or tr.end_round > bound:
            bad.append(f"{script.name} on {g.name}: {tr.outcome} "
                       f"at {tr.end_round} > {bound}")
    out.append(_claim("scripts", "sweep-bounds",
                      "every sweep script beats its claimed round bound "
                      "against solver-optimal robbers", not bad,
                      _mismatch_note(bad)))

    h10 = h_graph(10)
    game3 = pursuit.solve(h10, 1, 3)
    tr = strategies.arena(h10, strategies.solver_optimal_cop(game3),
                          strategies.hn_robbers_squad(3), 3, 40)
    out.append(_claim("scripts", "squad-three",
                      "the 3-robber squad survives >= 22 rounds on H(10) "
                      "against the extracted optimal cop",
                      tr.end_round is not None and tr.end_round >= 22,
                      f"lasted {tr.end_round}"))
    game2 = pursuit.solve(h10, 1, 2)
    tr = strategies.arena(h10, strategies.solver_optimal_cop(game2),
                          strategies.hn_robbers_squad(2), 2, 40)
    out.append(_claim("scripts", "squad-two",
                      "the 2-robber squad survives >= 14 rounds on H(10)",
                      tr.end_round is not None and tr.end_round >= 14,
                      f"lasted {tr.end_round}"))

    bad = []
    for n in (7, 10):
        hn = h_graph(n)
        game = pursuit.solve(hn, 1, 1)
        tr = strategies.arena(hn, strategies.hn_cop_from_vertex2(),
                              strategies.solver_optimal_robbers(game), 1, 30)
        if tr.outcome != "captured_all" or tr.end_round > n - 4:
            bad.append(f"H{n}: {tr.outcome} at {tr.end_round}")
    out.append(_claim("scripts", "chase-from-2",
                      "the chase script from label 2 captures within n-4 on "
                      "H(7) and H(10)", not bad, _mismatch_note(bad)))

    want_chase = {-4: +4, -3: +1, -1: +3, 0: +4, +1: +1, +3: +3, +4: +4}
    want_realign = {-4: 4, -3: 5, -1: 3, 0: 4, +1: 5, +3: 3, +4: 4}
    want_dodge = {-4: +1, -3: -1, -1: -3, +1: -4, +3: -4, +4: -4}
    rows_ok = (strategies.HN_COP_CHASE == want_chase and
               strategies.HN_COP_REALIGN == want_realign and
               strategies.HN_ROBBER_DODGE == want_dodge)
    out.append(_claim("scripts", "reaction-tables",
                      "chase, realignment and dodge tables carry the exact "
                      "rows of the published strategies", rows_ok))

    bad = []
    for g in connected_graphs_up_to(5):
        for k in (1, 2):
            for m in (1, 2):
                game = pursuit.solve(g, k, m)
                ct = game.capture_time()
                if not is_finite(ct):
                    continue
                tr = strategies.arena(
                    g, strategies.solver_optimal_cop(game),
                    strategies.solver_optimal_robbers(game), m, int(ct) + 5)
                if tr.end_round != ct:
                    bad.append(f"{g.name},k={k},m={m}: arena={tr.end_round} "
                               f"capt={value_to_json(ct)}")
    out.append(_claim("scripts", "replay-consistency",
                      "optimal-vs-optimal arena replays reproduce the "
                      "capture time exactly (corpus n <= 5, k,m <= 2)",
                      not bad, _mismatch_note(bad)))

    bad = []
    for g, k in [(path(5), 1), (star(4), 1), (wheel(6), 2), (cycle(7), 2),
                 (caterpillar(3, [0, 2, 0]), 1)]:
        sched = zerovis.extract_schedule(g, k)
        zv = zerovis.zero_vis_capture_time(g, k)
        if clearing_round_of_walk(g, sched) != zv:
            bad.append(f"{g.name},k={k}")
    out.append(_claim("scripts", "schedule-replay",
                      "extracted clearing schedules, replayed against all "
                      "robber trajectories at once, clear in exactly the "
                      "0-visibility time", not bad, _mismatch_note(bad)))
    return out


SUITES = {
    "formulas": suite_formulas,
    "hn": suite_hn,
    "bounds": suite_bounds,
    "zerovis": suite_zerovis,
    "limits": suite_limits,
    "characterization": suite_characterization,
    "properties": suite_properties,
    "divergence": suite_divergence,
    "scripts": suite_scripts,
}


def run(suites: list[str] | None = None) -> list[ClaimResult]:
    names = suites if suites else list(SUITES)
    out: list[ClaimResult] = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from "
                           f"{sorted(SUITES)}")
        out.extend(SUITES[name]())
    return out
