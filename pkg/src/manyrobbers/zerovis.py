"""Zero-visibility solving via contamination clearing, and the limit probe.

With an invisible, omniscient robber the only observable event is capture,
so adaptive cop play buys nothing: solving reduces to a shortest walk over
(cop configuration, contaminated vertex set) states.  A round moves the cops
(clearing what they step on) and then grows the remaining contamination by
one closed neighborhood.  Recontamination is allowed; the state space
encodes it natively.

The limit probe connects this to the pursuit solver: the capture times
capt_k(G, m) are nondecreasing in m and, exactly when k cops can clear the
graph blind, they stabilize at the 0-visibility capture time.
"""

from __future__ import annotations

from collections import OrderedDict
from dataclasses import dataclass

import numpy as np

from . import pursuit
from ._backend import backend
from .configs import build_cop_space
from .errors import StateSpaceCapError
from .graphs import Graph
from .values import GameValue, ROBBERS_WIN, is_finite, value_to_json


class ClearingGame:
    """Shortest clearing schedules for k cops on one graph."""

    def __init__(self, graph: Graph, k: int, cap_states: int | None = None):
        if k < 1:
            raise ValueError("need at least one cop")
        self.graph = graph
        self.k = k
        n = graph.n
        self.cops = build_cop_space(graph, k)
        nmasks = 1 << n
        states = self.cops.count * nmasks
        limit = cap_states if cap_states is not None else pursuit.state_cap()
        if states > limit:
            raise StateSpaceCapError(
                f"clearing game on {n} vertices with k={k} needs {states} "
                f"states (cap {limit})", states, limit)

        closed = np.zeros(n, dtype=np.int64)
        for v in range(n):
            for w in graph.closed_neighborhood(v):
                closed[v] |= 1 << w
        spread = np.zeros(nmasks, dtype=np.int64)
        for x in range(1, nmasks):
            low = (x & -x).bit_length() - 1
            spread[x] = spread[x & (x - 1)] | closed[low]
        self._nmasks = nmasks

        rounds, end_state, end_move, parent = backend().clearing_bfs(
            self.cops.move_ptr, self.cops.move_dat, self.cops.masks,
            spread, (1 << n) - 1)
        self._rounds = rounds
        self._end_state = end_state
        self._end_move = end_move
        self._parent = parent

    def capture_time(self) -> GameValue:
        return ROBBERS_WIN if self._rounds < 0 else int(self._rounds)

    def schedule(self) -> list[tuple[int, ...]] | None:
        """Witness walk, one cop configuration per round (round 0 first)."""
        if self._rounds < 0:
            return None
        if self._rounds == 0:
            return [self.cops.config(self._end_move)]
        chain = [self._end_state]
        while self._parent[chain[-1]] >= 0:
            chain.append(int(self._parent[chain[-1]]))
        chain.reverse()
        configs = [self.cops.config(s // self._nmasks) for s in chain]
        configs.append(self.cops.config(self._end_move))
        return configs


_CLEARING: OrderedDict = OrderedDict()
_CLEARING_CACHE_SIZE = 16
_ZV_SCALARS: dict = {}


def clearing_game(graph: Graph, k: int, **kwargs) -> ClearingGame:
    key = (graph, k)
    game = _CLEARING.get(key)
    if game is None:
        game = ClearingGame(graph, k, **kwargs)
        _CLEARING[key] = game
        if len(_CLEARING) > _CLEARING_CACHE_SIZE:
            _CLEARING.popitem(last=False)
    else:
        _CLEARING.move_to_end(key)
    return game


def clear_caches() -> None:
    _CLEARING.clear()
    _ZV_SCALARS.clear()


def zero_vis_capture_time(graph: Graph, k: int) -> GameValue:
    """Rounds k blind cops need against an omniscient robber."""
    key = (graph, k)
    if key not in _ZV_SCALARS:
        _ZV_SCALARS[key] = clearing_game(graph, k).capture_time()
    return _ZV_SCALARS[key]


def zero_vis_cop_number(graph: Graph) -> int:
    """Least k for which k blind cops can always capture."""
    for k in range(1, graph.n + 1):
        if is_finite(zero_vis_capture_time(graph, k)):
            return k
    raise AssertionError("n cops clear any graph at placement")  # pragma: no cover


def is_strong_k_cop_win(graph: Graph, k: int) -> bool:
    """True when capt_k(G, m) stabilizes as m grows (blind k-cop-win)."""
    return is_finite(zero_vis_capture_time(graph, k))


def extract_schedule(graph: Graph, k: int) -> list[tuple[int, ...]]:
    """A minimum-length clearing walk; deterministic for fixed inputs."""
    sched = clearing_game(graph, k).schedule()
    if sched is None:
        raise ValueError(f"{k} cops cannot clear this graph")
    return sched


# -- the limit probe -----------------------------------------------------------

VERDICT_CONVERGED = "converged"
VERDICT_DIVERGENCE = "divergence_evidence"
VERDICT_NOT_COP_WIN = "not_cop_win"


@dataclass
class LimitProbeReport:
    """Observed behavior of capt_k(G, m) for m = 1..max_m.

    ``converged`` is exact: the nondecreasing sequence is bounded by the
    0-visibility capture time and stays put once it hits it.  The divergence
    verdict is evidence-grade only; no finite prefix proves divergence.
    """

    k: int
    max_m: int
    sequence: list[GameValue]
    verdict: str
    limit: int | None
    zero_vis_time: GameValue

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "max_m": self.max_m,
            "sequence": [value_to_json(v) for v in self.sequence],
            "verdict": self.verdict,
            "limit": self.limit,
            "zero_vis_time": value_to_json(self.zero_vis_time),
        }


def limit_probe(graph: Graph, k: int, max_m: int) -> LimitProbeReport:
    """Track capt_k(G, m) for growing m against the 0-visibility time.

    Stops as soon as the sequence reaches the 0-visibility capture time;
    a single solve at the largest robber count serves every smaller one.
    """
    if max_m < 1:
        raise ValueError("max_m must be at least 1")
    zv = zero_vis_capture_time(graph, k)
    first = pursuit.capture_time(graph, k, 1)
    if not is_finite(first):
        return LimitProbeReport(k=k, max_m=max_m, sequence=[ROBBERS_WIN],
                                verdict=VERDICT_NOT_COP_WIN, limit=None,
                                zero_vis_time=zv)
    if is_finite(zv) and first == zv:
        return LimitProbeReport(k=k, max_m=max_m, sequence=[first],
                                verdict=VERDICT_CONVERGED, limit=int(zv),
                                zero_vis_time=zv)
    # solve in stages so sequences that stabilize early never pay for the
    # full-size game; one solve serves every robber count below its size
    stages = sorted({min(6, max_m), max_m})
    sequence: list[GameValue] = []
    for stage in stages:
        game = pursuit.solve(graph, k, stage)
        for m in range(len(sequence) + 1, stage + 1):
            value = game.capture_time_for(m)
            sequence.append(value)
            if is_finite(zv) and value == zv:
                return LimitProbeReport(k=k, max_m=max_m, sequence=sequence,
                                        verdict=VERDICT_CONVERGED,
                                        limit=int(zv), zero_vis_time=zv)
    return LimitProbeReport(k=k, max_m=max_m, sequence=sequence,
                            verdict=VERDICT_DIVERGENCE, limit=None,
                            zero_vis_time=zv)


def probe_csv(report: LimitProbeReport) -> str:
    """CSV of (m, capt) pairs for external plotting."""
    lines = ["m,capture_time"]
    for m, v in enumerate(report.sequence, start=1):
        lines.append(f"{m},{value_to_json(v)}")
    return "\n".join(lines) + "\n"
