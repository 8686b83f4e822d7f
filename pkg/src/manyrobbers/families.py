"""Deterministic generators for the graph families under study.

All generators are pure and 0-indexed.  The maximum-capture-time family
``h_graph`` is traditionally labeled 1..n; internally vertex ``i`` carries
traditional label ``i + 1`` (see HGRAPH_LABEL_OFFSET).
"""

from __future__ import annotations

from .errors import GraphError
from .graphs import Graph

# internal id + offset = traditional 1-based label used in h_graph analyses
HGRAPH_LABEL_OFFSET = 1


def path(n: int) -> Graph:
    """Path on n >= 1 vertices, 0..n-1 in order."""
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)],
                                name=f"P{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph.from_edge_list(n, edges, name=f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete needs n >= 1, got {n}")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph.from_edge_list(n, edges, name=f"K{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n}; part M is vertices 0..m-1, part N is m..m+n-1."""
    if m < 1 or n < 1:
        raise GraphError("complete_bipartite needs both part sizes >= 1")
    edges = [(i, m + j) for i in range(m) for j in range(n)]
    return Graph.from_edge_list(m + n, edges, name=f"K{m},{n}")


def bipartition(m: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two parts of complete_bipartite(m, n) in its vertex numbering."""
    return tuple(range(m)), tuple(range(m, m + n))


def star(n: int) -> Graph:
    """Star K_{1,n} with hub 0 and leaves 1..n."""
    if n < 1:
        raise GraphError(f"star needs n >= 1, got {n}")
    g = complete_bipartite(1, n)
    g.name = f"K1,{n}"
    return g


def wheel(n: int) -> Graph:
    """Wheel on n >= 4 vertices: hub 0 joined to the rim cycle 1..n-1."""
    if n < 4:
        raise GraphError(f"wheel needs n >= 4, got {n}")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph.from_edge_list(n, edges, name=f"W{n}")


def caterpillar(spine_length: int, leaf_counts: list[int]) -> Graph:
    """Spine path 0..spine_length-1 with leaf_counts[i] legs on spine vertex i."""
    if spine_length < 1:
        raise GraphError("caterpillar needs spine_length >= 1")
    if len(leaf_counts) != spine_length:
        raise GraphError("leaf_counts length must equal spine_length")
    if any(c < 0 for c in leaf_counts):
        raise GraphError("leaf counts must be nonnegative")
    edges = [(i, i + 1) for i in range(spine_length - 1)]
    nxt = spine_length
    for i, count in enumerate(leaf_counts):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return Graph.from_edge_list(nxt, edges,
                                name=f"caterpillar{spine_length},{leaf_counts}")


def subdivided_star(n: int) -> Graph:
    """Star K_{1,n} with every edge subdivided once (2n+1 vertices).

    Center 0, inner ring 1..n, outer leaves n+1..2n where n+i hangs off i.
    """
    if n < 1:
        raise GraphError(f"subdivided_star needs n >= 1, got {n}")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, n + i) for i in range(1, n + 1)]
    return Graph.from_edge_list(2 * n + 1, edges, name=f"T{n}")


def _hgraph_core_edges() -> list[tuple[int, int]]:
    # the 7-vertex seed, in traditional 1-based labels: the path 6-2-1-4,
    # two vertices (5 and 3) joined to every path vertex, and vertex 7
    # joined to the path ends and to 3
    return [(1, 2), (1, 4), (2, 6), (5, 6), (5, 2), (5, 1), (5, 4),
            (3, 6), (3, 2), (3, 1), (3, 4), (7, 6), (7, 4), (7, 3)]


def h_graph(n: int) -> Graph:
    """Maximum-capture-time family: the 7-vertex seed grown by a chain of
    degree-3 vertices, each new vertex k joined to k-1, k-3 and k-4.

    Requires n >= 7.  Internal vertex i carries traditional label i+1.
    """
    if n < 7:
        raise GraphError(f"h_graph needs n >= 7, got {n}")
    labeled = _hgraph_core_edges()
    for k in range(8, n + 1):
        labeled += [(k, k - 1), (k, k - 3), (k, k - 4)]
    edges = [(a - HGRAPH_LABEL_OFFSET, b - HGRAPH_LABEL_OFFSET) for a, b in labeled]
    return Graph.from_edge_list(n, edges, name=f"H{n}")


def h_label(internal: int) -> int:
    """Traditional 1-based label of an internal h_graph vertex id."""
    return internal + HGRAPH_LABEL_OFFSET


def h_vertex(label: int) -> int:
    """Internal vertex id for a traditional 1-based h_graph label."""
    return label - HGRAPH_LABEL_OFFSET
