"""Independent reference solvers used to cross-check the fast kernels.

Deliberately naive: dictionaries of tuple positions and full Bellman sweeps,
with the complete move semantics (robbers may step onto cops and die doing
so).  Usable only at toy scale; the test suite compares these against the
production solver.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product

from .graphs import Graph
from .values import GameValue, ROBBERS_WIN

INF = float("inf")


def _joint_moves(graph: Graph, team: tuple[int, ...]) -> list[tuple[int, ...]]:
    options = [sorted(graph.closed_neighborhood(v)) for v in team]
    return sorted({tuple(sorted(pick)) for pick in product(*options)})


def brute_force_tables(graph: Graph, k: int, m: int):
    """Value dictionaries for every position, by repeated Bellman sweeps."""
    cop_cfgs = list(combinations_with_replacement(range(graph.n), k))
    rob_cfgs = [cfg for s in range(1, m + 1)
                for cfg in combinations_with_replacement(range(graph.n), s)]

    cop_moves = {c: _joint_moves(graph, c) for c in cop_cfgs}
    rob_moves = {r: _joint_moves(graph, r) for r in rob_cfgs}

    vc = {}
    vr = {}
    for c in cop_cfgs:
        occupied = set(c)
        for r in rob_cfgs:
            if not occupied & set(r):
                vc[(c, r)] = INF
                vr[(c, r)] = INF

    def survivors(r, cop_set):
        return tuple(v for v in r if v not in cop_set)

    changed = True
    sweeps = 0
    while changed and sweeps <= len(vc) + 2:
        changed = False
        sweeps += 1
        for (c, r) in vr:
            cop_set = set(c)
            best = -INF
            for r2 in rob_moves[r]:
                left = survivors(r2, cop_set)
                cand = 0 if not left else vc[(c, left)]
                if cand > best:
                    best = cand
            if best < vr[(c, r)]:
                vr[(c, r)] = best
                changed = True
        for (c, r) in vc:
            best = INF
            for c2 in cop_moves[c]:
                left = survivors(r, set(c2))
                cand = 1 if not left else 1 + vr[(c2, left)]
                if cand < best:
                    best = cand
            if best < vc[(c, r)]:
                vc[(c, r)] = best
                changed = True
    return vc, vr


def brute_force_capture_time(graph: Graph, k: int, m: int) -> GameValue:
    vc, _ = brute_force_tables(graph, k, m)
    cop_cfgs = sorted({c for (c, _r) in vc} |
                      {tuple(cfg) for cfg in
                       combinations_with_replacement(range(graph.n), k)})
    placements = list(combinations_with_replacement(range(graph.n), m))
    best = INF
    for c in cop_cfgs:
        cop_set = set(c)
        worst = 0
        for r in placements:
            left = tuple(v for v in r if v not in cop_set)
            cand = 0 if not left else vc[(c, left)]
            if cand > worst:
                worst = cand
        if worst < best:
            best = worst
    return ROBBERS_WIN if best == INF else int(best)


def brute_force_zero_vis(graph: Graph, k: int, horizon: int) -> GameValue:
    """Shortest clearing walk by exhaustive search over cop-walk prefixes.

    Exponential in the horizon; only for tiny graphs.  Returns ROBBERS_WIN
    when no walk of at most ``horizon`` rounds clears the contamination.
    """
    n = graph.n
    closed = [graph.closed_neighborhood(v) for v in range(n)]
    starts = list(combinations_with_replacement(range(n), k))
    best = horizon + 1

    def spread(contam: frozenset) -> frozenset:
        out = set()
        for v in contam:
            out |= closed[v]
        return frozenset(out)

    def explore(team: tuple[int, ...], contam: frozenset, depth: int):
        nonlocal best
        if depth >= best:
            return
        for move in _joint_moves(graph, team):
            x1 = contam - set(move)
            if not x1:
                best = min(best, depth + 1)
                continue
            if depth + 1 >= best:
                continue
            explore(move, spread(x1) - set(move), depth + 1)

    for team in starts:
        contam = frozenset(range(n)) - set(team)
        if not contam:
            return 0
        explore(team, contam, 0)
    return int(best) if best <= horizon else ROBBERS_WIN


def clearing_round_of_walk(graph: Graph, walk: list[tuple[int, ...]]) -> int | None:
    """Round at which a fixed cop walk rules out every robber trajectory.

    ``walk`` lists one team configuration per round, starting with the
    placement.  Returns the clearing round index, or None when some robber
    trajectory survives the whole walk.
    """
    alive = set(range(graph.n)) - set(walk[0])
    if not alive:
        return 0
    for i, team in enumerate(walk[1:], start=1):
        occupied = set(team)
        alive -= occupied
        if not alive:
            return i
        # the spread keeps every still-alive trajectory alive (staying put is
        # legal), so contamination can only empty on the cop-move subtraction
        alive = {w for v in alive for w in graph.closed_neighborhood(v)}
        alive -= occupied
    return None
