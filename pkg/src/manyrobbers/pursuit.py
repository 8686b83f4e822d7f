"""Exact minimax solver for pursuit with k cops and m robbers.

Rules: cops place first, robbers answer; each round all cops step within
closed neighborhoods, co-located robbers are captured, then the survivors
step, and robbers landing on a cop are captured as well.  The value of a
position is the number of rounds the cops need against worst-case robbers,
or robbers-win when no labeling exists.

One solved game covers every robber count up to m at once: positions with
j <= m robbers never reference larger ones, so ``capture_time_for(j)`` reads
off the same table.

Robber moves onto cop-occupied vertices are pruned during solving: such a
move is dominated by leaving the sacrificed robbers in place (an extra
surviving robber can shadow another's play, so survivors are never worth
less).  The brute-force oracle in ``reference`` keeps the full move set and
the tests compare the two.
"""

from __future__ import annotations

import os
from collections import OrderedDict
from dataclasses import dataclass
from math import ceil

import numpy as np

from ._backend import backend
from .configs import (RobberSpace, build_cop_space, build_move_tables,
                      build_robber_space, capture_table)
from .errors import StateSpaceCapError
from .graphs import Graph
from .values import GameValue, ROBBERS_WIN, is_finite

DEFAULT_STATE_CAP = 50_000_000
DEFAULT_MOVE_BUDGET = 120_000_000
STATE_CAP_ENV = "MANYROBBERS_STATE_CAP"

COPS_TO_MOVE = "cops"
ROBBERS_TO_MOVE = "robbers"


def state_cap() -> int:
    raw = os.environ.get(STATE_CAP_ENV)
    return int(raw) if raw else DEFAULT_STATE_CAP


# robber config spaces and joint-move CSRs depend only on (graph, m); the
# k=1 and k=2 solves of one limit probe share them
_ROBSPACES: dict = {}
_MOVES: OrderedDict = OrderedDict()
_MOVES_CACHE_SIZE = 4


def _robber_space(n: int, m: int) -> RobberSpace:
    key = (n, m)
    if key not in _ROBSPACES:
        _ROBSPACES[key] = build_robber_space(n, m)
        if len(_ROBSPACES) > 32:
            _ROBSPACES.pop(next(iter(_ROBSPACES)))
    return _ROBSPACES[key]


def _robber_moves(graph: Graph, space: RobberSpace, move_budget: int):
    key = (graph, space.m)
    cached = _MOVES.get(key)
    if cached is None:
        tables = build_move_tables(graph, space, move_budget)
        cached = backend().build_moves(
            space.counts, space.size_of, space.offsets, space.ps,
            tables.bits, tables.dist_start, tables.dist_len,
            tables.dist_codes, tables.per_config_bound)
        _MOVES[key] = cached
        if len(_MOVES) > _MOVES_CACHE_SIZE:
            _MOVES.popitem(last=False)
    else:
        _MOVES.move_to_end(key)
    return cached


class PursuitGame:
    """Value tables for one (graph, cop count, max robber count)."""

    def __init__(self, graph: Graph, k: int, m: int,
                 cap_positions: int | None = None,
                 move_budget: int = DEFAULT_MOVE_BUDGET):
        if k < 1 or m < 1:
            raise ValueError("need at least one cop and one robber")
        self.graph = graph
        self.k = k
        self.m = m
        n = graph.n

        self.cops = build_cop_space(graph, k)
        self.robbers = _robber_space(n, m)
        positions = self.cops.count * self.robbers.count * 2
        limit = cap_positions if cap_positions is not None else state_cap()
        if positions > limit:
            raise StateSpaceCapError(
                f"game on {n} vertices with k={k}, m={m} needs {positions} "
                f"positions (cap {limit})", positions, limit)

        self.cap = capture_table(self.cops, self.robbers)
        self.complete = all(graph.degree(v) == n - 1 for v in range(n))
        if self.complete:
            self.move_ptr = np.zeros(1, dtype=np.int64)
            self.move_dat = np.zeros(0, dtype=np.int32)
        else:
            self.move_ptr, self.move_dat = _robber_moves(graph, self.robbers,
                                                         move_budget)

        self.value_cop, self.value_rob = backend().pursuit_retrograde(
            self.cops.move_ptr, self.cops.move_dat, self.cap,
            self.robbers.size_of, m, self.move_ptr, self.move_dat,
            self.complete)

    # -- position values ---------------------------------------------------

    def _normalize(self, cops, robbers):
        ci = self.cops.index_of(tuple(cops))
        occupied = set(self.cops.config(ci))
        survivors = tuple(sorted(v for v in robbers if v not in occupied))
        return ci, survivors

    def value(self, cops, robbers, turn: str = COPS_TO_MOVE) -> GameValue:
        """Value of a position; robbers standing on cops are removed first."""
        if len(robbers) > self.m:
            raise ValueError(f"at most m={self.m} robbers supported")
        ci, survivors = self._normalize(cops, robbers)
        if not survivors:
            return 0
        ri = self.robbers.index_of(survivors)
        table = self.value_cop if turn == COPS_TO_MOVE else self.value_rob
        raw = int(table[ci, ri])
        return raw if raw >= 0 else ROBBERS_WIN

    def _start_values(self, ci: int, size: int) -> np.ndarray:
        """Per-placement values (robbers place a size-``size`` multiset after
        seeing the cop start); -1 encodes robbers-win."""
        blk = self.robbers.size_block(size)
        caps = self.cap[ci, blk]
        vals = np.zeros(caps.shape[0], dtype=np.int64)
        alive = caps >= 0
        safe = np.where(alive, caps, 0)
        v = self.value_cop[ci][safe].astype(np.int64)
        vals[alive] = np.where(v[alive] >= 0, v[alive], -1)
        return vals

    def start_value(self, cop_start, size: int | None = None) -> GameValue:
        """Worst-case rounds from a fixed cop placement."""
        size = self.m if size is None else size
        ci = self.cops.index_of(tuple(cop_start))
        vals = self._start_values(ci, size)
        if (vals < 0).any():
            return ROBBERS_WIN
        return int(vals.max())

    def capture_time_for(self, size: int) -> GameValue:
        if not (1 <= size <= self.m):
            raise ValueError(f"robber count must be in 1..{self.m}")
        best: GameValue = ROBBERS_WIN
        for ci in range(self.cops.count):
            vals = self._start_values(ci, size)
            if (vals < 0).any():
                continue
            best = min(best, int(vals.max()))
        return best

    def capture_time(self) -> GameValue:
        return self.capture_time_for(self.m)

    def optimal_starts(self, size: int | None = None) -> list[tuple[int, ...]]:
        """All cop placements achieving the capture time (empty if none win)."""
        size = self.m if size is None else size
        target = self.capture_time_for(size)
        if not is_finite(target):
            return []
        out = []
        for ci in range(self.cops.count):
            vals = self._start_values(ci, size)
            if (vals >= 0).all() and int(vals.max()) == target:
                out.append(self.cops.config(ci))
        return out

    def worst_placement(self, cop_start, size: int | None = None) -> tuple:
        """Lex-least robber placement maximizing the game length."""
        size = self.m if size is None else size
        ci = self.cops.index_of(tuple(cop_start))
        vals = self._start_values(ci, size)
        idx = int(np.argmax(vals < 0)) if (vals < 0).any() else int(np.argmax(vals))
        base = int(self.robbers.offsets[size])
        return self.robbers.config(base + idx)

    # -- one-step optimal play --------------------------------------------

    def best_cop_move(self, cops, robbers) -> tuple[int, ...]:
        """Lex-least joint cop move that is greedy-optimal at this position."""
        ci, survivors = self._normalize(cops, robbers)
        if not survivors:
            raise ValueError("all robbers already captured")
        ri = self.robbers.index_of(survivors)
        best_val = None
        best_cj = None
        for cj in self.cops.moves_of(ci):
            s2 = int(self.cap[cj, ri])
            if s2 == -1:
                contrib = 0
            else:
                raw = int(self.value_rob[cj, s2])
                if raw < 0:
                    continue
                contrib = raw
            if best_val is None or contrib < best_val:
                best_val = contrib
                best_cj = int(cj)
        if best_val is None:
            raise ValueError("position has no winning cop continuation")
        return self.cops.config(best_cj)

    def robber_move_indices(self, ri: int):
        if self.complete:
            s = int(self.robbers.size_of[ri])
            return range(int(self.robbers.offsets[s]),
                         int(self.robbers.offsets[s + 1]))
        return self.move_dat[self.move_ptr[ri]:self.move_ptr[ri + 1]]

    def best_robber_move(self, cops, robbers) -> tuple[int, ...]:
        """Lex-least joint robber move maximizing the value (escaping moves
        first).  Only moves avoiding cop vertices are considered; landing on
        a cop is never better than standing still."""
        ci = self.cops.index_of(tuple(cops))
        survivors = tuple(sorted(robbers))
        if any(v in set(self.cops.config(ci)) for v in survivors):
            raise ValueError("robbers to move must not stand on cops")
        ri = self.robbers.index_of(survivors)
        best_val = -1
        best_q = None
        for q in self.robber_move_indices(ri):
            q = int(q)
            if self.cap[ci, q] != q:
                continue
            raw = int(self.value_cop[ci, q])
            contrib = np.inf if raw < 0 else raw
            if best_q is None or contrib > best_val:
                best_val = contrib
                best_q = q
        return self.robbers.config(best_q)


# -- cached access ------------------------------------------------------------

_GAMES: OrderedDict = OrderedDict()
_GAME_CACHE_SIZE = 8
_SCALARS: dict = {}


def solve(graph: Graph, k: int, m: int, **kwargs) -> PursuitGame:
    """Solved value tables for (graph, k, m); small LRU cache behind it."""
    key = (graph, k, m)
    game = _GAMES.get(key)
    if game is None:
        game = PursuitGame(graph, k, m, **kwargs)
        _GAMES[key] = game
        if len(_GAMES) > _GAME_CACHE_SIZE:
            _GAMES.popitem(last=False)
    else:
        _GAMES.move_to_end(key)
    return game


def clear_caches() -> None:
    _GAMES.clear()
    _SCALARS.clear()
    _MOVES.clear()
    _ROBSPACES.clear()


def capture_time(graph: Graph, k: int, m: int) -> GameValue:
    """Rounds k optimal cops need to capture m optimal robbers."""
    key = (graph, k, m)
    if key not in _SCALARS:
        # a larger solved game for the same (graph, k) already contains m
        for (g2, k2, m2), game in reversed(_GAMES.items()):
            if g2 == graph and k2 == k and m2 >= m:
                _SCALARS[key] = game.capture_time_for(m)
                break
        else:
            game = solve(graph, k, m)
            for j in range(1, m + 1):
                _SCALARS[(graph, k, j)] = game.capture_time_for(j)
    return _SCALARS[key]


def capture_time_from(graph: Graph, cop_start, m: int) -> GameValue:
    """Worst-case rounds from a fixed cop placement (k = len(cop_start))."""
    cop_start = tuple(sorted(cop_start))
    return solve(graph, len(cop_start), m).start_value(cop_start)


def cop_number(graph: Graph) -> int:
    """Least k winning the game; independent of the robber count."""
    for k in range(1, graph.n + 1):
        if is_finite(capture_time(graph, k, 1)):
            return k
    raise AssertionError("n cops always win")  # pragma: no cover


def z_set(graph: Graph) -> frozenset:
    """Start vertices from which one cop wins within n-4 rounds."""
    if graph.n < 7:
        raise ValueError("z_set requires at least 7 vertices")
    return _threshold_set(graph, graph.n - 4)


def w_set(graph: Graph) -> frozenset:
    """Start vertices from which one cop wins within floor(n/2) rounds."""
    return _threshold_set(graph, graph.n // 2)


def _threshold_set(graph: Graph, threshold: int) -> frozenset:
    game = solve(graph, 1, 1)
    if not is_finite(game.capture_time()):
        raise ValueError("threshold start sets are defined for cop-win graphs")
    return frozenset(v for v in range(graph.n)
                     if game.start_value((v,)) <= threshold)


def d_to_set_over_traps(graph: Graph, targets) -> int:
    """Largest distance to ``targets`` from any closed trap neighborhood."""
    targets = sorted(set(targets))
    if not targets:
        raise ValueError("target set must be nonempty")
    traps = graph.traps()
    if not traps:
        raise ValueError("graph has no traps")
    xs = set()
    for u in traps:
        xs |= graph.closed_neighborhood(u)
    return max(graph.distance_to_set(x, targets) for x in xs)


# -- bound reports ------------------------------------------------------------

@dataclass
class BoundReport:
    """One capture-time bound checked against a solved game."""

    name: str
    hypotheses_met: bool
    hypothesis_note: str
    bound: int | None
    measured: GameValue | None
    holds: bool | None

    def to_json(self) -> dict:
        from .values import value_to_json
        return {
            "name": self.name,
            "hypotheses_met": self.hypotheses_met,
            "hypothesis_note": self.hypothesis_note,
            "bound": self.bound,
            "measured": None if self.measured is None
            else value_to_json(self.measured),
            "holds": self.holds,
        }


def _report(name: str, graph: Graph, m: int, ok: bool, note: str,
            bound: int | None, include_measured: bool) -> BoundReport:
    if not ok:
        return BoundReport(name, False, note, None, None, None)
    measured = capture_time(graph, 1, m) if include_measured else None
    holds = None if measured is None else bool(measured <= bound)
    return BoundReport(name, True, note, bound, measured, holds)


def bound_general(graph: Graph, m: int, include_measured: bool = True) -> BoundReport:
    """d_Z(m-1) + m(n-4) on cop-win graphs with at least 7 vertices."""
    n = graph.n
    ok = n >= 7 and graph.is_dismantlable()
    if not ok:
        return _report("general", graph, m, False,
                       "needs a cop-win graph on >= 7 vertices", None,
                       include_measured)
    dz = d_to_set_over_traps(graph, z_set(graph))
    return _report("general", graph, m, True, f"d_Z={dz}",
                   dz * (m - 1) + m * (n - 4), include_measured)


def bound_diameter(graph: Graph, m: int, include_measured: bool = True) -> BoundReport:
    """(m-1)diam + m(n-4) on cop-win graphs with at least 7 vertices."""
    n = graph.n
    ok = n >= 7 and graph.is_dismantlable()
    if not ok:
        return _report("diameter", graph, m, False,
                       "needs a cop-win graph on >= 7 vertices", None,
                       include_measured)
    d = graph.diameter()
    return _report("diameter", graph, m, True, f"diam={d}",
                   (m - 1) * d + m * (n - 4), include_measured)


def bound_2dismantlable(graph: Graph, m: int,
                        include_measured: bool = True) -> BoundReport:
    """m*floor(n/2) + (m-1)d_W on 2-dismantlable graphs."""
    if not graph.is_2_dismantlable():
        return _report("2dismantlable", graph, m, False,
                       "graph is not 2-dismantlable", None, include_measured)
    dw = d_to_set_over_traps(graph, w_set(graph))
    return _report("2dismantlable", graph, m, True, f"d_W={dw}",
                   m * (graph.n // 2) + (m - 1) * dw, include_measured)


def bound_tree(graph: Graph, m: int, include_measured: bool = True) -> BoundReport:
    """ceil(diam/2) + (m-1)diam on trees with m at most the leaf count."""
    ok = graph.is_tree() and m <= len(graph.leaves())
    if not ok:
        return _report("tree", graph, m, False,
                       "needs a tree with m <= leaf count", None,
                       include_measured)
    d = graph.diameter()
    return _report("tree", graph, m, True, f"diam={d}",
                   ceil(d / 2) + (m - 1) * d, include_measured)


# -- strategy extraction -------------------------------------------------------

class CopPolicy:
    """Greedy-optimal cop play extracted from a solved game.

    Moves are lexicographically least among the optimal ones, so replayed
    transcripts are reproducible.
    """

    def __init__(self, game: PursuitGame):
        self.game = game

    def place(self) -> tuple[int, ...]:
        starts = self.game.optimal_starts()
        if not starts:
            raise ValueError("the robbers win on this graph")
        return starts[0]

    def move(self, cops, robbers) -> tuple[int, ...]:
        return self.game.best_cop_move(cops, robbers)


def extract_cop_strategy(graph: Graph, k: int, m: int) -> CopPolicy:
    game = solve(graph, k, m)
    if not is_finite(game.capture_time()):
        raise ValueError("the robbers win on this graph; no policy exists")
    return CopPolicy(game)
