"""Indexed configuration spaces for cop and robber teams.

A team configuration is a sorted multiset of vertex ids.  Configurations of
one size are indexed in lexicographic order of their nondecreasing tuples;
robber configurations of sizes 1..m share a single index space ordered by
size, then rank.  Everything here is plain numpy so that both the jitted and
the pure-numpy solver backends consume the same tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from .errors import StateSpaceCapError
from .graphs import Graph


def multiset_count(n: int, size: int) -> int:
    return comb(n + size - 1, size)


def rank_prefix_table(n: int, max_size: int) -> np.ndarray:
    """PS[t, v] = number of nondecreasing t-tuples over [0,n) that start
    below v; the building block of lexicographic multiset ranking."""
    ps = np.zeros((max_size + 1, n + 1), dtype=np.int64)
    for t in range(max_size + 1):
        row = [comb(n - u + t - 1, t) for u in range(n)]
        ps[t, 1:] = np.cumsum(row)
    return ps


def enumerate_tuples(n: int, size: int) -> np.ndarray:
    """All nondecreasing tuples, lex ascending, shape (count, size) int16."""
    if size == 0:
        return np.zeros((1, 0), dtype=np.int16)
    arr = np.fromiter(
        (v for tup in combinations_with_replacement(range(n), size) for v in tup),
        dtype=np.int16,
        count=multiset_count(n, size) * size,
    )
    return arr.reshape(-1, size)


def tuples_to_counts(tuples: np.ndarray, n: int) -> np.ndarray:
    counts = np.zeros((tuples.shape[0], n), dtype=np.int16)
    rows = np.repeat(np.arange(tuples.shape[0]), tuples.shape[1])
    np.add.at(counts, (rows, tuples.ravel()), 1)
    return counts


def rank_tuple_rows(tuples: np.ndarray, ps: np.ndarray) -> np.ndarray:
    """Lexicographic ranks of nondecreasing tuple rows (vectorized)."""
    b, s = tuples.shape
    if s == 0:
        return np.zeros(b, dtype=np.int64)
    ranks = np.zeros(b, dtype=np.int64)
    prev = np.zeros(b, dtype=np.int64)
    for i in range(s):
        t = s - 1 - i
        cur = tuples[:, i].astype(np.int64)
        ranks += ps[t, cur] - ps[t, prev]
        prev = cur
    return ranks


def counts_to_tuples(counts: np.ndarray, size: int) -> np.ndarray:
    """Expand count-vector rows (all of one total) into sorted tuples."""
    b, n = counts.shape
    if size == 0:
        return np.zeros((b, 0), dtype=np.int16)
    cum = np.cumsum(counts, axis=1)
    slots = np.arange(size)
    return np.sum(cum[:, None, :] <= slots[None, :, None], axis=2).astype(np.int16)


@dataclass
class CopSpace:
    """All cop configurations of a fixed team size, with the joint-move CSR."""

    n: int
    k: int
    tuples: np.ndarray
    counts: np.ndarray
    masks: np.ndarray
    move_ptr: np.ndarray
    move_dat: np.ndarray
    _rank: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return self.tuples.shape[0]

    def index_of(self, config: tuple[int, ...]) -> int:
        return self._rank[tuple(sorted(config))]

    def config(self, idx: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.tuples[idx])

    def moves_of(self, idx: int) -> np.ndarray:
        return self.move_dat[self.move_ptr[idx]:self.move_ptr[idx + 1]]


def build_cop_space(graph: Graph, k: int) -> CopSpace:
    n = graph.n
    ps = rank_prefix_table(n, k)
    tuples = enumerate_tuples(n, k)
    counts = tuples_to_counts(tuples, n)
    masks = np.zeros(tuples.shape[0], dtype=np.int64)
    for v in range(n):
        masks |= (counts[:, v] > 0).astype(np.int64) << v

    nbrs = [np.array(graph.closed_neighbors_sorted(v), dtype=np.int16)
            for v in range(n)]
    ptr = np.zeros(tuples.shape[0] + 1, dtype=np.int64)
    blocks = []
    for idx in range(tuples.shape[0]):
        cfg = tuples[idx]
        grids = np.meshgrid(*[nbrs[v] for v in cfg], indexing="ij")
        joint = np.stack([g.ravel() for g in grids], axis=1)
        joint.sort(axis=1)
        ranks = np.unique(rank_tuple_rows(joint, ps))
        blocks.append(ranks)
        ptr[idx + 1] = ptr[idx] + ranks.size
    dat = np.concatenate(blocks).astype(np.int32)
    space = CopSpace(n=n, k=k, tuples=tuples, counts=counts, masks=masks,
                     move_ptr=ptr, move_dat=dat)
    space._rank = {tuple(int(v) for v in row): i for i, row in enumerate(tuples)}
    return space


@dataclass
class RobberSpace:
    """Robber configurations of every size 1..m in one global index space."""

    n: int
    m: int
    offsets: np.ndarray          # offsets[s] = first index of the size-s block
    size_of: np.ndarray          # (total,) int16
    counts: np.ndarray           # (total, n) int16
    ps: np.ndarray               # rank prefix table
    _tuples_by_size: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return int(self.offsets[self.m + 1])

    def size_block(self, s: int) -> slice:
        return slice(int(self.offsets[s]), int(self.offsets[s + 1]))

    def tuples_of_size(self, s: int) -> np.ndarray:
        return self._tuples_by_size[s]

    def index_of(self, config: tuple[int, ...]) -> int:
        tup = tuple(sorted(config))
        s = len(tup)
        row = np.array([tup], dtype=np.int16)
        return int(self.offsets[s] + rank_tuple_rows(row, self.ps)[0])

    def config(self, idx: int) -> tuple[int, ...]:
        s = int(self.size_of[idx])
        local = idx - int(self.offsets[s])
        return tuple(int(v) for v in self._tuples_by_size[s][local])

    def rank_count_rows(self, counts: np.ndarray, sizes: np.ndarray) -> np.ndarray:
        """Global indices of count-vector rows with per-row totals ``sizes``.

        Rows with size 0 map to -1 (the empty configuration).
        """
        out = np.full(counts.shape[0], -1, dtype=np.int64)
        for s in range(1, self.m + 1):
            sel = sizes == s
            if not sel.any():
                continue
            tups = counts_to_tuples(counts[sel], s)
            out[sel] = self.offsets[s] + rank_tuple_rows(tups, self.ps)
        return out


def build_robber_space(n: int, m: int) -> RobberSpace:
    ps = rank_prefix_table(n, m)
    offsets = np.zeros(m + 2, dtype=np.int64)
    for s in range(1, m + 1):
        offsets[s + 1] = offsets[s] + multiset_count(n, s)
    total = int(offsets[m + 1])
    size_of = np.zeros(total, dtype=np.int16)
    counts = np.zeros((total, n), dtype=np.int16)
    tuples_by_size = {}
    for s in range(1, m + 1):
        tups = enumerate_tuples(n, s)
        blk = slice(int(offsets[s]), int(offsets[s + 1]))
        size_of[blk] = s
        counts[blk] = tuples_to_counts(tups, n)
        tuples_by_size[s] = tups
    space = RobberSpace(n=n, m=m, offsets=offsets, size_of=size_of,
                        counts=counts, ps=ps)
    space._tuples_by_size = tuples_by_size
    return space


def capture_table(cop_space: CopSpace, rob_space: RobberSpace) -> np.ndarray:
    """cap[ci, ri] = index of the surviving robber configuration after the
    robbers standing on cop vertices are removed, or -1 if none survive."""
    nc, nr = cop_space.count, rob_space.count
    cap = np.empty((nc, nr), dtype=np.int32)
    mask_bits = np.zeros((nc, rob_space.n), dtype=np.int16)
    for v in range(rob_space.n):
        mask_bits[:, v] = (cop_space.masks >> v) & 1
    for ci in range(nc):
        keep = rob_space.counts * (1 - mask_bits[ci])[None, :]
        sizes = keep.sum(axis=1)
        cap[ci] = rob_space.rank_count_rows(keep, sizes).astype(np.int32)
    return cap


# -- robber move enumeration tables ------------------------------------------

@dataclass
class MoveTables:
    """Per-(vertex, stack size) distribution tables for joint robber moves.

    A stack of c robbers on v may scatter into any multiset of size c over
    N[v]; each distribution is encoded as a packed count vector so partial
    joint moves can be accumulated by integer addition and deduplicated by
    sorting.
    """

    bits: int
    dist_start: np.ndarray      # (n, m+1) int64
    dist_len: np.ndarray        # (n, m+1) int64
    dist_codes: np.ndarray      # int64 flat
    per_config_bound: np.ndarray   # (total,) int64
    total_bound: int


def key_bits(n: int, m: int) -> int:
    bits = max(1, (m + 1).bit_length())
    if n * bits > 62:
        raise StateSpaceCapError(
            f"packed robber-count keys need {n * bits} bits (> 62); "
            "graph too large for this robber count", n * bits, 62)
    return bits


def build_move_tables(graph: Graph, rob_space: RobberSpace,
                      move_budget: int) -> MoveTables:
    n, m = graph.n, rob_space.m
    bits = key_bits(n, m)
    nbrs = [graph.closed_neighbors_sorted(v) for v in range(n)]

    max_count = rob_space.counts.max(axis=0).astype(np.int64)

    dist_start = np.zeros((n, m + 1), dtype=np.int64)
    dist_len = np.zeros((n, m + 1), dtype=np.int64)
    codes: list[np.ndarray] = []
    pos = 0
    for v in range(n):
        for c in range(1, int(max_count[v]) + 1):
            block = []
            for combo in combinations_with_replacement(nbrs[v], c):
                key = 0
                for w in combo:
                    key += 1 << (bits * w)
                block.append(key)
            arr = np.array(block, dtype=np.int64)
            dist_start[v, c] = pos
            dist_len[v, c] = arr.size
            codes.append(arr)
            pos += arr.size

    dist_codes = (np.concatenate(codes) if codes
                  else np.zeros(0, dtype=np.int64))

    # per configuration: the raw product of distribution choices, clipped by
    # the size of the whole size class (layered dedup can never exceed either)
    deg_choices = np.ones((n, m + 1), dtype=np.float64)
    for v in range(n):
        for c in range(1, m + 1):
            deg_choices[v, c] = comb(len(nbrs[v]) + c - 1, c)
    raw = np.ones(rob_space.count, dtype=np.float64)
    for v in range(n):
        raw *= deg_choices[v, rob_space.counts[:, v]]
    class_size = np.array([multiset_count(n, s) for s in range(m + 1)],
                          dtype=np.float64)
    bound = np.minimum(raw, class_size[rob_space.size_of]).astype(np.int64)
    total = int(bound.sum())
    if total > move_budget:
        raise StateSpaceCapError(
            f"joint robber-move table would need {total} entries "
            f"(budget {move_budget}); reduce m or raise the budget",
            total, move_budget)
    return MoveTables(bits=bits, dist_start=dist_start, dist_len=dist_len,
                      dist_codes=dist_codes, per_config_bound=bound,
                      total_bound=total)
