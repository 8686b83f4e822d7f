"""Pure-numpy solver kernels.

Reference implementations of the hot loops; the jitted backend in
``_kernels_numba`` mirrors these exactly (same outputs, same canonical
orderings).  Selected via the MANYROBBERS_BACKEND environment flag.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"


def _csr_flatten(ptr: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """Indices into the CSR data array covering the given rows, in order."""
    lens = (ptr[rows + 1] - ptr[rows]).astype(np.int64)
    total = int(lens.sum())
    if total == 0:
        return np.zeros(0, dtype=np.int64)
    starts = ptr[rows].astype(np.int64)
    shift = np.repeat(np.cumsum(lens) - lens, lens)
    return np.arange(total, dtype=np.int64) - shift + np.repeat(starts, lens)


def build_moves(counts: np.ndarray, size_of: np.ndarray, offsets: np.ndarray,
                ps: np.ndarray, bits: int, dist_start: np.ndarray,
                dist_len: np.ndarray, dist_codes: np.ndarray,
                per_bound: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Joint robber moves per configuration: deduplicated, rank-sorted CSR."""
    nr, n = counts.shape
    mask = (1 << bits) - 1
    ptr = np.zeros(nr + 1, dtype=np.int64)
    dat = np.empty(int(per_bound.sum()), dtype=np.int32)
    pos = 0
    shifts = bits * np.arange(n, dtype=np.int64)
    for r in range(nr):
        keys = np.zeros(1, dtype=np.int64)
        for v in range(n):
            c = int(counts[r, v])
            if c == 0:
                continue
            d0 = int(dist_start[v, c])
            block = dist_codes[d0:d0 + int(dist_len[v, c])]
            keys = np.unique(keys[:, None] + block[None, :])
        s = int(size_of[r])
        kcounts = ((keys[:, None] >> shifts[None, :]) & mask).astype(np.int16)
        cum = np.cumsum(kcounts, axis=1)
        slots = np.arange(s)
        tuples = np.sum(cum[:, None, :] <= slots[None, :, None],
                        axis=2).astype(np.int64)
        ranks = np.zeros(keys.size, dtype=np.int64)
        prev = np.zeros(keys.size, dtype=np.int64)
        for i in range(s):
            t = s - 1 - i
            cur = tuples[:, i]
            ranks += ps[t, cur] - ps[t, prev]
            prev = cur
        ranks += offsets[s]
        ranks.sort()
        dat[pos:pos + ranks.size] = ranks
        pos += ranks.size
        ptr[r + 1] = pos
    return ptr, dat[:pos].copy()


def pursuit_retrograde(cm_ptr: np.ndarray, cm_dat: np.ndarray,
                       cap: np.ndarray, size_of: np.ndarray, m: int,
                       mv_ptr: np.ndarray, mv_dat: np.ndarray,
                       complete_flag: bool) -> tuple[np.ndarray, np.ndarray]:
    """Backward labeling of the pursuit game.

    Cop-to-move nodes are labeled by a per-level pull (any successor one
    level down), robber-to-move nodes by counting down untaken moves; a
    robber node closes when its last successor is labeled.  The robber move
    relation is symmetric, so the move CSR serves as its own reverse.
    """
    nc, nr = cap.shape
    maskok = cap == np.arange(nr, dtype=np.int32)[None, :]
    value_cop = np.full((nc, nr), -1, dtype=np.int32)
    value_rob = np.full((nc, nr), -1, dtype=np.int32)
    count = np.zeros((nc, nr), dtype=np.int64)

    if complete_flag:
        for ci in range(nc):
            per_size = np.bincount(size_of[maskok[ci]], minlength=m + 2)
            count[ci] = per_size[size_of]
    else:
        for ci in range(nc):
            ok = maskok[ci][mv_dat].astype(np.int64)
            sums = np.add.reduceat(ok, mv_ptr[:-1])
            sums[mv_ptr[1:] == mv_ptr[:-1]] = 0
            count[ci] = sums

    t = 0
    while t <= nc * nr + 1:
        t += 1
        progressed = False
        for ci in range(nc):
            unlabeled = maskok[ci] & (value_cop[ci] == -1)
            if not unlabeled.any():
                continue
            hit = np.zeros(nr, dtype=bool)
            for cj in cm_dat[cm_ptr[ci]:cm_ptr[ci + 1]]:
                capj = cap[cj]
                if t == 1:
                    hit |= capj == -1
                safe = np.where(capj >= 0, capj, 0)
                hit |= (capj >= 0) & (value_rob[cj][safe] == t - 1)
            newly = unlabeled & hit
            if not newly.any():
                continue
            progressed = True
            value_cop[ci, newly] = t
            rows = np.flatnonzero(newly)
            if complete_flag:
                per_size = np.bincount(size_of[rows], minlength=m + 2)
                count[ci] -= per_size[size_of]
            else:
                flat = _csr_flatten(mv_ptr, rows)
                np.add.at(count[ci], mv_dat[flat], -1)
            newly_rob = maskok[ci] & (value_rob[ci] == -1) & (count[ci] == 0)
            value_rob[ci, newly_rob] = t
        if not progressed:
            break
    return value_cop, value_rob


def clearing_bfs(cm_ptr: np.ndarray, cm_dat: np.ndarray,
                 copmask: np.ndarray, spread: np.ndarray,
                 full_mask: int) -> tuple[int, int, int, np.ndarray]:
    """Multi-source BFS over (cop configuration, contaminated set) states.

    Returns (rounds, final_parent_state, final_cop_config, parent_array);
    rounds is -1 when no cop walk clears the graph.  States are explored in
    ascending id order per level, so the witness schedule is canonical.
    """
    nci = copmask.shape[0]
    nmasks = spread.shape[0]
    parent = np.full(nci * nmasks, -2, dtype=np.int64)

    contam0 = full_mask & ~copmask
    ids0 = np.arange(nci, dtype=np.int64) * nmasks + contam0
    covered = contam0 == 0
    if covered.any():
        ci = int(np.argmax(covered))
        return 0, ci * nmasks, ci, parent
    uniq = np.unique(ids0)
    parent[uniq] = -1
    frontier = uniq

    depth = 0
    while frontier.size:
        depth += 1
        cis = frontier // nmasks
        contams = frontier % nmasks
        lens = (cm_ptr[cis + 1] - cm_ptr[cis]).astype(np.int64)
        flat = _csr_flatten(cm_ptr, cis)
        cj = cm_dat[flat].astype(np.int64)
        par = np.repeat(frontier, lens)
        x1 = np.repeat(contams, lens) & ~copmask[cj]
        cleared = x1 == 0
        if cleared.any():
            i = int(np.argmax(cleared))
            return depth, int(par[i]), int(cj[i]), parent
        x2 = spread[x1] & ~copmask[cj]
        ids = cj * nmasks + x2
        fresh = parent[ids] == -2
        ids_f = ids[fresh]
        par_f = par[fresh]
        uniq, first = np.unique(ids_f, return_index=True)
        parent[uniq] = par_f[first]
        frontier = uniq
    return -1, -1, -1, parent
