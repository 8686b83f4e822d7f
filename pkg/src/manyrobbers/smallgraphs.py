"""Exhaustive corpora of small connected graphs, one per isomorphism class.

The verification battery sweeps every connected graph on up to 6 vertices
(142 classes) and every tree on up to 7 vertices.  Graphs are enumerated by
edge subsets and deduplicated by a canonical form: minimum edge bitmask over
all vertex permutations.  Trees use the classic rooted-at-center certificate
instead, which keeps the 7-vertex case fast.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .graphs import Graph


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def _connected_mask_filter(masks: np.ndarray, n: int,
                           slots: list[tuple[int, int]]) -> np.ndarray:
    bits = (masks[:, None] >> np.arange(len(slots))) & 1
    rows = np.zeros((n, masks.size), dtype=np.int64)
    for s, (i, j) in enumerate(slots):
        rows[i] |= bits[:, s] << j
        rows[j] |= bits[:, s] << i
    reach = np.ones(masks.size, dtype=np.int64)
    for _ in range(n):
        for v in range(n):
            sel = (reach >> v) & 1
            reach |= sel * rows[v]
    return reach == (1 << n) - 1


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """All connected graphs on exactly n vertices, up to isomorphism (n <= 7)."""
    if n < 1 or n > 7:
        raise ValueError("connected graph enumeration supported for 1 <= n <= 7")
    if n == 1:
        return (Graph.from_edge_list(1, [], name="g1_0"),)
    slots = _edge_slots(n)
    nslots = len(slots)
    slot_index = {pair: s for s, pair in enumerate(slots)}

    masks = np.arange(1 << nslots, dtype=np.int64)
    masks = masks[_connected_mask_filter(masks, n, slots)]

    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append([slot_index[tuple(sorted((perm[i], perm[j])))]
                          for (i, j) in slots])
    perm_maps = np.array(perm_maps, dtype=np.int64)

    bits = (masks[:, None] >> np.arange(nslots)) & 1
    canon = masks.copy()
    for row in perm_maps:
        np.minimum(canon, (bits << row).sum(axis=1), out=canon)
    canon = np.unique(canon)

    out = []
    for idx, mask in enumerate(canon.tolist()):
        edges = [slots[s] for s in range(nslots) if (mask >> s) & 1]
        out.append(Graph.from_edge_list(n, edges, name=f"g{n}_{idx}"))
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graphs_up_to(n: int) -> tuple[Graph, ...]:
    """All connected graphs on 2..n vertices, up to isomorphism."""
    out: list[Graph] = []
    for k in range(2, n + 1):
        out.extend(connected_graphs(k))
    return tuple(out)


def _tree_certificate(n: int, adj: list[set]) -> str:
    """Canonical certificate of a labeled tree (rooted at its center)."""
    if n == 1:
        return "()"
    degree = [len(adj[v]) for v in range(n)]
    leaves = [v for v in range(n) if degree[v] <= 1]
    removed = len(leaves)
    deg = degree[:]
    layer = leaves
    while n - removed >= 1:
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        if not nxt:
            break
        layer = nxt
        removed += len(nxt)
    centers = layer

    def rooted(v: int, parent: int) -> str:
        subs = sorted(rooted(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    if len(centers) == 1:
        return rooted(centers[0], -1)
    a, b = centers
    return "".join(sorted([rooted(a, b), rooted(b, a)]))


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    """All trees on exactly n vertices, up to isomorphism (n <= 8)."""
    if n < 1 or n > 8:
        raise ValueError("tree enumeration supported for 1 <= n <= 8")
    if n == 1:
        return (Graph.from_edge_list(1, [], name="t1_0"),)
    if n == 2:
        return (Graph.from_edge_list(2, [(0, 1)], name="t2_0"),)

    seen: dict[str, Graph] = {}
    for seq in product(range(n), repeat=n - 2):
        # decode the sequence into tree edges
        deg = [1] * n
        for v in seq:
            deg[v] += 1
        edges = []
        heap = [v for v in range(n) if deg[v] == 1]
        heapq.heapify(heap)
        for v in seq:
            leaf = heapq.heappop(heap)
            edges.append((leaf, v))
            deg[leaf] -= 1
            deg[v] -= 1
            if deg[v] == 1:
                heapq.heappush(heap, v)
        last = [v for v in range(n) if deg[v] == 1]
        edges.append((last[0], last[1]))

        adj: list[set] = [set() for _ in range(n)]
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        cert = _tree_certificate(n, adj)
        if cert not in seen:
            seen[cert] = Graph.from_edge_list(n, edges, name=f"t{n}_{len(seen)}")
    return tuple(seen.values())


@lru_cache(maxsize=None)
def trees_up_to(n: int) -> tuple[Graph, ...]:
    out: list[Graph] = []
    for k in range(2, n + 1):
        out.extend(trees(k))
    return tuple(out)
