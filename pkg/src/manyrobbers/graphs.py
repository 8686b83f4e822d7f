"""Finite simple connected graphs and the structural queries the games need.

Vertices are 0-indexed ints.  Graphs are immutable after construction and are
safe to share between solver instances; all derived data (distance matrix,
trap sets) is cached lazily.  Self-loops are never stored: every game treats
the graph as reflexive, so move sets are closed neighborhoods ``N[v]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import GraphError


class Graph:
    """Simple, undirected, connected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "name", "_dist", "_traps", "_hash")

    def __init__(self, n: int, adj: Sequence[frozenset], name: str | None = None):
        self.n = n
        self.adj = tuple(adj)
        self.name = name
        self._dist = None
        self._traps = None
        self._hash = None

    # -- construction -------------------------------------------------

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]],
                       name: str | None = None) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse.

        Raises GraphError on out-of-range vertices, self-loops, or a
        disconnected result.
        """
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        neighbor_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u} not allowed")
            neighbor_sets[u].add(v)
            neighbor_sets[v].add(u)
        g = cls(n, [frozenset(s) for s in neighbor_sets], name=name)
        if not g._is_connected():
            raise GraphError("graph is disconnected")
        return g

    def _is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return len(seen) == self.n

    # -- basics --------------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def closed_neighborhood(self, v: int) -> frozenset:
        return self.adj[v] | {v}

    def closed_neighbors_sorted(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v] | {v}))

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        label = self.name or f"graph(n={self.n}, m={self.edge_count()})"
        return f"<Graph {label}>"

    # -- metric queries --------------------------------------------------

    def _distance_matrix(self):
        if self._dist is None:
            dist = [[-1] * self.n for _ in range(self.n)]
            for s in range(self.n):
                row = dist[s]
                row[s] = 0
                queue = deque([s])
                while queue:
                    u = queue.popleft()
                    for v in self.adj[u]:
                        if row[v] < 0:
                            row[v] = row[u] + 1
                            queue.append(v)
            self._dist = dist
        return self._dist

    def distance(self, u: int, v: int) -> int:
        return self._distance_matrix()[u][v]

    def distance_to_set(self, u: int, targets: Iterable[int]) -> int:
        targets = list(targets)
        if not targets:
            raise GraphError("distance_to_set requires a nonempty target set")
        row = self._distance_matrix()[u]
        return min(row[t] for t in targets)

    def eccentricity(self, v: int) -> int:
        return max(self._distance_matrix()[v])

    def diameter(self) -> int:
        return max(self.eccentricity(v) for v in range(self.n))

    # -- traps, dismantlability, retracts ---------------------------------

    def covers(self, v: int, u: int) -> bool:
        """True when ``N[u] <= N[v]`` with ``v != u``."""
        return v != u and self.closed_neighborhood(u) <= self.closed_neighborhood(v)

    def coverers(self, u: int) -> list[int]:
        """All vertices covering ``u``, ascending."""
        return [v for v in range(self.n) if self.covers(v, u)]

    def traps(self) -> frozenset:
        if self._traps is None:
            self._traps = frozenset(u for u in range(self.n) if self.coverers(u))
        return self._traps

    def dismantling_order(self) -> list[int] | None:
        """A witness elimination ordering by iterated trap deletion, or None.

        Deletes the lowest-id trap at each step; trap deletion order does not
        affect whether the graph dismantles to a single vertex.
        """
        remaining = set(range(self.n))
        neighbor = {u: set(self.adj[u]) for u in remaining}
        order = []
        while len(remaining) > 1:
            trap = None
            for u in sorted(remaining):
                nu = neighbor[u] | {u}
                if any(nu <= (neighbor[v] | {v}) for v in remaining if v != u):
                    trap = u
                    break
            if trap is None:
                return None
            remaining.discard(trap)
            for v in neighbor[trap]:
                neighbor[v].discard(trap)
            del neighbor[trap]
            order.append(trap)
        order.extend(remaining)
        return order

    def is_dismantlable(self) -> bool:
        return self.dismantling_order() is not None

    def is_2_dismantlable(self) -> bool:
        """Cop-win graph on >= 7 vertices shedding two distinct traps at a time.

        The pair chosen at each step is an existential choice, so this runs an
        exact search over trap pairs with memoization on the surviving vertex
        set; greedy pair-picking is not obviously confluent.
        """
        if self.n < 7 or not self.is_dismantlable():
            return False

        memo: dict[frozenset, bool] = {}

        def reducible(vertices: frozenset) -> bool:
            if len(vertices) < 7:
                return True
            cached = memo.get(vertices)
            if cached is not None:
                return cached
            closed = {u: ({v for v in self.adj[u] if v in vertices} | {u})
                      for u in vertices}
            traps = [u for u in vertices
                     if any(closed[u] <= closed[v] for v in vertices if v != u)]
            result = False
            for i, a in enumerate(traps):
                for b in traps[i + 1:]:
                    if reducible(vertices - {a, b}):
                        result = True
                        break
                if result:
                    break
            memo[vertices] = result
            return result

        return reducible(frozenset(range(self.n)))

    def one_point_retract(self, u: int) -> tuple["Graph", "RetractionMap"]:
        """Remove the trap ``u``, mapping it to its lowest-id coverer.

        Returns the shrunken graph (vertices renumbered to stay contiguous)
        and the retraction map.  Raises GraphError if ``u`` is not a trap.
        """
        coverers = self.coverers(u)
        if not coverers:
            raise GraphError(f"vertex {u} is not a trap")
        target = coverers[0]
        keep = [v for v in range(self.n) if v != u]
        relabel = {old: new for new, old in enumerate(keep)}
        edges = [(relabel[a], relabel[b]) for a, b in self.edges()
                 if a != u and b != u]
        retract = Graph.from_edge_list(self.n - 1, edges)
        image = {v: (target if v == u else v) for v in range(self.n)}
        rmap = RetractionMap(source=self, removed=u, image=image, relabel=relabel)
        rmap.check()
        return retract, rmap

    # -- trees ---------------------------------------------------------

    def is_tree(self) -> bool:
        return self.edge_count() == self.n - 1

    def leaves(self) -> frozenset:
        if not self.is_tree():
            raise GraphError("leaves() is defined for trees")
        if self.n == 1:
            return frozenset({0})
        return frozenset(v for v in range(self.n) if self.degree(v) == 1)

    def is_caterpillar(self) -> bool:
        """Tree whose non-leaf vertices induce a path (possibly empty)."""
        if not self.is_tree():
            return False
        if self.n <= 2:
            return True
        spine = [v for v in range(self.n) if self.degree(v) > 1]
        if not spine:
            return True
        spine_set = set(spine)
        spine_deg = {v: sum(1 for w in self.adj[v] if w in spine_set) for v in spine}
        if any(d > 2 for d in spine_deg.values()):
            return False
        # the spine is connected because pruning leaves cannot disconnect a tree
        return sum(1 for d in spine_deg.values() if d <= 1) <= 2


@dataclass
class RetractionMap:
    """Edge-preserving map collapsing a removed trap onto its coverer.

    ``image`` maps original vertex ids to original vertex ids (identity off
    the removed trap); ``relabel`` renumbers surviving vertices to the
    contiguous ids used by the retract graph.
    """

    source: Graph
    removed: int
    image: dict
    relabel: dict

    def apply(self, v: int) -> int:
        """Image of a source vertex in the retract graph's numbering."""
        return self.relabel[self.image[v]]

    def check(self) -> None:
        """Verify the homomorphism property on every edge, and identity."""
        for v in range(self.source.n):
            if v != self.removed and self.image[v] != v:
                raise GraphError("retraction must fix the surviving vertices")
        for a, b in self.source.edges():
            fa, fb = self.image[a], self.image[b]
            if fa != fb and fb not in self.source.adj[fa]:
                raise GraphError(f"retraction breaks edge ({a},{b})")


# -- edge-list text format -------------------------------------------------
#
# First line "n m", then m lines "u v"; blank lines and '#' comments allowed.

def to_edgelist_text(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def from_edgelist_text(text: str, name: str | None = None) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise GraphError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphError(f"expected header 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise GraphError(f"header declares {m} edges but {len(rows) - 1} found")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise GraphError(f"bad edge line {row!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edge_list(n, edges, name=name)


# -- graph6 ------------------------------------------------------------------
#
# Standard bit-packed format for graphs on at most 62 vertices: one header
# byte n+63, then the upper triangle of the adjacency matrix in column order
# (0,1),(0,2),(1,2),(0,3),... packed 6 bits per byte, each offset by 63.

def to_graph6(graph: Graph) -> str:
    if graph.n > 62:
        raise GraphError("graph6 output supported for at most 62 vertices")
    bits = []
    for j in range(1, graph.n):
        for i in range(j):
            bits.append(1 if j in graph.adj[i] else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(graph.n + 63)]
    for i in range(0, len(bits), 6):
        chunk = bits[i:i + 6]
        value = 0
        for b in chunk:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def from_graph6(text: str, name: str | None = None) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    n = ord(s[0]) - 63
    if not (1 <= n <= 62):
        raise GraphError(f"unsupported graph6 vertex count byte {s[0]!r}")
    body = s[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphError(f"graph6 body for n={n} needs {need} bytes, got {len(body)}")
    bits = []
    for ch in body:
        value = ord(ch) - 63
        if not (0 <= value < 64):
            raise GraphError(f"invalid graph6 byte {ch!r}")
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edge_list(n, edges, name=name)
