"""Jitted solver kernels; exact mirrors of ``_kernels_numpy``.

Same inputs, same outputs, same canonical orderings: the two backends are
interchangeable and the test suite compares them element for element.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND_NAME = "numba"


@njit(cache=True)
def _build_moves_impl(counts, size_of, offsets, ps, bits, dist_start,
                      dist_len, dist_codes, per_bound):
    nr, n = counts.shape
    mask = (np.int64(1) << bits) - np.int64(1)
    total_bound = np.int64(0)
    maxb = np.int64(1)
    for r in range(nr):
        total_bound += per_bound[r]
        if per_bound[r] > maxb:
            maxb = per_bound[r]
    m = np.int64(0)
    for r in range(nr):
        if size_of[r] > m:
            m = size_of[r]
    nclass = offsets[m + 1] - offsets[m]   # largest same-total class

    ptr = np.zeros(nr + 1, dtype=np.int64)
    dat = np.empty(total_bound, dtype=np.int32)
    cur_keys = np.empty(maxb, dtype=np.int64)
    nxt_keys = np.empty(maxb, dtype=np.int64)
    nxt_ranks = np.empty(maxb, dtype=np.int64)
    seen = np.zeros(nclass, dtype=np.uint8)
    pos = np.int64(0)
    for r in range(nr):
        cur_keys[0] = 0
        cur_len = 1
        total = 0
        for v in range(n):
            c = counts[r, v]
            if c == 0:
                continue
            total += c
            d0 = dist_start[v, c]
            dl = dist_len[v, c]
            nl = 0
            for a in range(cur_len):
                base = cur_keys[a]
                for d in range(dl):
                    key2 = base + dist_codes[d0 + d]
                    # lexicographic rank within the total-`total` class
                    rank = np.int64(0)
                    i = 0
                    prevv = 0
                    for w in range(n):
                        cw = (key2 >> (bits * w)) & mask
                        if cw > 0:
                            t = total - 1 - i
                            rank += ps[t, w] - ps[t, prevv]
                            i += cw
                            prevv = w
                    if seen[rank] == 0:
                        seen[rank] = 1
                        nxt_keys[nl] = key2
                        nxt_ranks[nl] = rank
                        nl += 1
            for a in range(nl):
                seen[nxt_ranks[a]] = 0
            tmp = cur_keys
            cur_keys = nxt_keys
            nxt_keys = tmp
            cur_len = nl
        s = size_of[r]
        for a in range(cur_len):
            dat[pos + a] = offsets[s] + nxt_ranks[a]
        blk = dat[pos:pos + cur_len]
        blk.sort()
        pos += cur_len
        ptr[r + 1] = pos
    return ptr, dat[:pos].copy()


def build_moves(counts, size_of, offsets, ps, bits, dist_start, dist_len,
                dist_codes, per_bound):
    return _build_moves_impl(counts, size_of, offsets, ps, bits, dist_start,
                             dist_len, dist_codes, per_bound)


@njit(cache=True)
def _pursuit_impl(cm_ptr, cm_dat, cap, size_of, m,
                  mv_ptr, mv_dat, complete_flag):
    nc, nr = cap.shape
    value_cop = np.full((nc, nr), -1, dtype=np.int32)
    value_rob = np.full((nc, nr), -1, dtype=np.int32)
    count = np.zeros((nc, nr), dtype=np.int64)
    maskok = np.zeros((nc, nr), dtype=np.uint8)
    for ci in range(nc):
        for r in range(nr):
            if cap[ci, r] == r:
                maskok[ci, r] = 1

    if complete_flag:
        for ci in range(nc):
            per_size = np.zeros(m + 2, dtype=np.int64)
            for r in range(nr):
                if maskok[ci, r]:
                    per_size[size_of[r]] += 1
            for r in range(nr):
                if maskok[ci, r]:
                    count[ci, r] = per_size[size_of[r]]
    else:
        for ci in range(nc):
            for r in range(nr):
                if maskok[ci, r]:
                    cnt = np.int64(0)
                    for e in range(mv_ptr[r], mv_ptr[r + 1]):
                        if maskok[ci, mv_dat[e]]:
                            cnt += 1
                    count[ci, r] = cnt

    newly = np.empty(nr, dtype=np.int64)
    per_size = np.zeros(m + 2, dtype=np.int64)
    t = 0
    while t <= nc * nr + 1:
        t += 1
        progressed = False
        for ci in range(nc):
            nnew = 0
            for r in range(nr):
                if maskok[ci, r] == 0 or value_cop[ci, r] != -1:
                    continue
                hit = False
                for e in range(cm_ptr[ci], cm_ptr[ci + 1]):
                    cj = cm_dat[e]
                    s2 = cap[cj, r]
                    if s2 == -1:
                        if t == 1:
                            hit = True
                            break
                    elif value_rob[cj, s2] == t - 1:
                        hit = True
                        break
                if hit:
                    newly[nnew] = r
                    nnew += 1
            if nnew == 0:
                continue
            progressed = True
            if complete_flag:
                for s in range(m + 2):
                    per_size[s] = 0
                for a in range(nnew):
                    r2 = newly[a]
                    value_cop[ci, r2] = t
                    per_size[size_of[r2]] += 1
                for r in range(nr):
                    count[ci, r] -= per_size[size_of[r]]
            else:
                for a in range(nnew):
                    r2 = newly[a]
                    value_cop[ci, r2] = t
                    for e in range(mv_ptr[r2], mv_ptr[r2 + 1]):
                        count[ci, mv_dat[e]] -= 1
            for r in range(nr):
                if maskok[ci, r] == 1 and value_rob[ci, r] == -1 \
                        and count[ci, r] == 0:
                    value_rob[ci, r] = t
        if not progressed:
            break
    return value_cop, value_rob


def pursuit_retrograde(cm_ptr, cm_dat, cap, size_of, m,
                       mv_ptr, mv_dat, complete_flag):
    return _pursuit_impl(cm_ptr, cm_dat, cap, size_of, m,
                         mv_ptr, mv_dat, complete_flag)


@njit(cache=True)
def _clearing_impl(cm_ptr, cm_dat, copmask, spread, full_mask):
    nci = copmask.shape[0]
    nmasks = spread.shape[0]
    parent = np.full(nci * nmasks, -2, dtype=np.int64)
    frontier = np.empty(nci * nmasks, dtype=np.int64)
    nxt = np.empty(nci * nmasks, dtype=np.int64)

    fl = 0
    for ci in range(nci):
        contam0 = full_mask & ~copmask[ci]
        if contam0 == 0:
            return 0, np.int64(ci) * nmasks, np.int64(ci), parent
        sid = ci * nmasks + contam0
        if parent[sid] == -2:
            parent[sid] = -1
            frontier[fl] = sid
            fl += 1

    depth = 0
    while fl > 0:
        depth += 1
        nl = 0
        for a in range(fl):
            s = frontier[a]
            ci = s // nmasks
            contam = s % nmasks
            for e in range(cm_ptr[ci], cm_ptr[ci + 1]):
                cj = cm_dat[e]
                x1 = contam & ~copmask[cj]
                if x1 == 0:
                    return depth, s, np.int64(cj), parent
                x2 = spread[x1] & ~copmask[cj]
                sid = cj * nmasks + x2
                if parent[sid] == -2:
                    parent[sid] = s
                    nxt[nl] = sid
                    nl += 1
        sub = nxt[:nl]
        sub.sort()
        for a in range(nl):
            frontier[a] = sub[a]
        fl = nl
    return -1, np.int64(-1), np.int64(-1), parent


def clearing_bfs(cm_ptr, cm_dat, copmask, spread, full_mask):
    depth, state, move, parent = _clearing_impl(cm_ptr, cm_dat, copmask,
                                                spread, np.int64(full_mask))
    return int(depth), int(state), int(move), parent
