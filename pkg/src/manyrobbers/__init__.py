"""Exact analysis of the game of cops and many robbers.

Pursuit where every cop move captures all co-located robbers and the game
runs until the last robber falls.  The package computes generalized capture
times, cop numbers, 0-visibility (blind-cop) capture times and cop numbers,
decides when the capture time stabilizes as robbers are added, and replays
the published strategies for these games on desk-scale graphs.
"""

from ._backend import backend_name, set_backend
from .errors import GraphError, IllegalMoveError, StateSpaceCapError
from .families import (caterpillar, complete, complete_bipartite, cycle,
                       h_graph, path, star, subdivided_star, wheel)
from .graphs import (Graph, RetractionMap, from_edgelist_text, from_graph6,
                     to_edgelist_text, to_graph6)
from .pursuit import (BoundReport, CopPolicy, PursuitGame, bound_2dismantlable,
                      bound_diameter, bound_general, bound_tree, capture_time,
                      capture_time_from, cop_number, d_to_set_over_traps,
                      extract_cop_strategy, solve, w_set, z_set)
from .values import GameValue, ROBBERS_WIN, RobbersWin, is_finite
from .zerovis import (ClearingGame, LimitProbeReport, extract_schedule,
                      is_strong_k_cop_win, limit_probe, zero_vis_capture_time,
                      zero_vis_cop_number)

__version__ = "0.1.0"

__all__ = [
    "BoundReport", "ClearingGame", "CopPolicy", "GameValue", "Graph",
    "GraphError", "IllegalMoveError", "LimitProbeReport", "PursuitGame",
    "ROBBERS_WIN", "RetractionMap", "RobbersWin", "StateSpaceCapError",
    "backend_name", "bound_2dismantlable", "bound_diameter", "bound_general",
    "bound_tree", "capture_time", "capture_time_from", "caterpillar",
    "complete", "complete_bipartite", "cop_number", "cycle",
    "d_to_set_over_traps", "extract_cop_strategy", "extract_schedule",
    "from_edgelist_text", "from_graph6", "h_graph", "is_finite",
    "is_strong_k_cop_win", "limit_probe", "path", "set_backend", "solve",
    "star", "subdivided_star", "to_edgelist_text", "to_graph6", "w_set",
    "wheel", "z_set", "zero_vis_capture_time", "zero_vis_cop_number",
]
