# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Same contracts as `_purecore`; `kernel` picks one at import time.  The
bitmask kernels run in C for n <= 64 and fall back to the pure versions
beyond that (the oracle budget keeps practical inputs far below 64).
"""

from libc.stdlib cimport free, malloc

import numpy as np

cimport numpy as cnp

BACKEND = "compiled"

_INF = 1 << 60

ctypedef unsigned long long u64
ctypedef long long i64

cdef i64 C_INF = <i64>1 << 60


cdef inline int _lowbit(u64 m) noexcept:
    cdef int i = 0
    while not (m & 1):
        m >>= 1
        i += 1
    return i


cdef int _fill_masks(int n, object masks, u64 *out) except -1:
    cdef int v
    for v in range(n):
        out[v] = <u64>masks[v]
    return 0


def all_pairs_dist(int n, masks):
    """BFS distance matrix; -1 marks unreachable pairs."""
    if n > 64:
        from . import _purecore
        return _purecore.all_pairs_dist(n, masks)
    cdef u64 *nbr = <u64 *>malloc(n * sizeof(u64))
    if nbr == NULL:
        raise MemoryError()
    cdef u64 full = (<u64>1 << n) - 1 if n < 64 else <u64>0 - 1
    cdef u64 frontier, seen, nxt, m
    cdef int s, v, d
    cdef list out = []
    cdef int *dist = <int *>malloc(n * sizeof(int))
    if dist == NULL:
        free(nbr)
        raise MemoryError()
    try:
        _fill_masks(n, masks, nbr)
        for s in range(n):
            for v in range(n):
                dist[v] = -1
            dist[s] = 0
            frontier = <u64>1 << s
            seen = frontier
            d = 0
            while frontier and seen != full:
                nxt = 0
                m = frontier
                while m:
                    v = _lowbit(m & (<u64>0 - m))
                    m &= m - 1
                    nxt |= nbr[v]
                frontier = nxt & ~seen
                seen |= frontier
                d += 1
                m = frontier
                while m:
                    v = _lowbit(m & (<u64>0 - m))
                    m &= m - 1
                    dist[v] = d
            out.append([dist[v] for v in range(n)])
        return out
    finally:
        free(nbr)
        free(dist)


def geodesic_pair_masks(int n, masks):
    """mask[x][y] = vertices on some x,y-geodesic (incl. endpoints)."""
    if n > 64:
        from . import _purecore
        return _purecore.geodesic_pair_masks(n, masks)
    dist = all_pairs_dist(n, masks)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] dmat = np.array(dist, dtype=np.int64)
    cdef i64[:, :] dd = dmat
    cdef int x, y, z
    cdef i64 dxy
    cdef u64 m
    cdef list out = [[0] * n for _ in range(n)]
    for x in range(n):
        out[x][x] = 1 << x
        for y in range(x + 1, n):
            dxy = dd[x, y]
            if dxy < 0:
                continue
            m = 0
            for z in range(n):
                if dd[x, z] >= 0 and dd[y, z] >= 0 and \
                        dd[x, z] + dd[y, z] == dxy:
                    m |= <u64>1 << z
            out[x][y] = m
            out[y][x] = m
    return out


def chordless_pair_masks(int n, masks):
    """mask[x][y] = vertices on some chordless x,y-path (incl. endpoints)."""
    if n > 64:
        from . import _purecore
        return _purecore.chordless_pair_masks(n, masks)
    cdef u64 *nbr = <u64 *>malloc(n * sizeof(u64))
    cdef u64 *closed = <u64 *>malloc(n * sizeof(u64))
    if nbr == NULL or closed == NULL:
        free(nbr)
        free(closed)
        raise MemoryError()
    cdef Py_ssize_t cap = 1024
    cdef int *st_last = <int *>malloc(cap * sizeof(int))
    cdef u64 *st_path = <u64 *>malloc(cap * sizeof(u64))
    cdef u64 *st_ban = <u64 *>malloc(cap * sizeof(u64))
    cdef int *st2_last
    cdef u64 *st2_path
    cdef u64 *st2_ban
    cdef Py_ssize_t top, i
    cdef int x, y, v, last, w
    cdef u64 ybit, acc, path, banned, cands, nbanned
    cdef list out = [[0] * n for _ in range(n)]
    if st_last == NULL or st_path == NULL or st_ban == NULL:
        free(nbr); free(closed); free(st_last); free(st_path); free(st_ban)
        raise MemoryError()
    try:
        _fill_masks(n, masks, nbr)
        for v in range(n):
            closed[v] = nbr[v] | (<u64>1 << v)
        for x in range(n):
            out[x][x] = 1 << x
            for y in range(x + 1, n):
                ybit = <u64>1 << y
                if nbr[x] & ybit:
                    out[x][y] = out[y][x] = (1 << x) | (1 << y)
                    continue
                acc = 0
                st_last[0] = x
                st_path[0] = <u64>1 << x
                st_ban[0] = 0
                top = 1
                while top:
                    top -= 1
                    last = st_last[top]
                    path = st_path[top]
                    banned = st_ban[top]
                    cands = nbr[last] & ~banned & ~path
                    if cands & ybit:
                        acc |= path | ybit
                        cands &= ~ybit
                    nbanned = banned | closed[last]
                    while cands:
                        w = _lowbit(cands & (<u64>0 - cands))
                        cands &= cands - 1
                        if top == cap:
                            cap *= 2
                            st2_last = <int *>malloc(cap * sizeof(int))
                            st2_path = <u64 *>malloc(cap * sizeof(u64))
                            st2_ban = <u64 *>malloc(cap * sizeof(u64))
                            if st2_last == NULL or st2_path == NULL or \
                                    st2_ban == NULL:
                                free(st2_last); free(st2_path); free(st2_ban)
                                raise MemoryError()
                            for i in range(top):
                                st2_last[i] = st_last[i]
                                st2_path[i] = st_path[i]
                                st2_ban[i] = st_ban[i]
                            free(st_last); free(st_path); free(st_ban)
                            st_last = st2_last
                            st_path = st2_path
                            st_ban = st2_ban
                        st_last[top] = w
                        st_path[top] = path | (<u64>1 << w)
                        st_ban[top] = nbanned
                        top += 1
                out[x][y] = out[y][x] = acc
        return out
    finally:
        free(nbr)
        free(closed)
        free(st_last)
        free(st_path)
        free(st_ban)


def connected_mask_table(int n, masks):
    """table[m] = 1 iff the induced subgraph on bitmask m is nonempty and
    connected."""
    if n > 30:
        raise MemoryError("connectivity table too large")
    cdef u64 *nbr = <u64 *>malloc(n * sizeof(u64))
    if nbr == NULL:
        raise MemoryError()
    cdef Py_ssize_t size = 1 << n
    table = bytearray(size)
    cdef unsigned char[:] tv = table
    cdef u64 m, reach, grow, mm
    cdef Py_ssize_t idx
    cdef int v
    try:
        _fill_masks(n, masks, nbr)
        for idx in range(1, size):
            m = <u64>idx
            reach = m & (<u64>0 - m)
            while True:
                grow = reach
                mm = reach
                while mm:
                    v = _lowbit(mm & (<u64>0 - mm))
                    mm &= mm - 1
                    grow |= nbr[v]
                grow &= m
                if grow == reach:
                    break
                reach = grow
            if reach == m:
                tv[idx] = 1
        return table
    finally:
        free(nbr)


def tree_g2(int n, offsets, neighbors, int root=0):
    """Minimum 2-geodetic set of a tree given as a CSR adjacency.

    Returns (value, selected) with selected a 0/1 flag sequence.  Mirrors
    the pure three-state DP, including its tie-breaking, so both backends
    reconstruct the same witness.
    """
    cdef cnp.ndarray[cnp.int64_t, ndim=1] offs_arr = \
        np.ascontiguousarray(offsets, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] nbrs_arr = \
        np.ascontiguousarray(neighbors, dtype=np.int64)
    cdef i64[:] offs = offs_arr
    cdef i64[:] nbrs = nbrs_arr

    cdef cnp.ndarray[cnp.int64_t, ndim=1] parent_a = np.full(n, -1, np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] order_a = np.zeros(n, np.int64)
    cdef i64[:] parent = parent_a
    cdef i64[:] order = order_a
    cdef i64 k = 1, i = 0, j, w, v, p
    order[0] = root
    parent[root] = root
    while i < k:
        v = order[i]
        i += 1
        for j in range(offs[v], offs[v + 1]):
            w = nbrs[j]
            if parent[w] < 0:
                parent[w] = v
                order[k] = w
                k += 1
    if k != n:
        raise ValueError("input graph is not connected")
    parent[root] = -1

    cdef cnp.ndarray[cnp.int64_t, ndim=2] dp = np.zeros((14, n), np.int64)
    cdef i64[:] alpha = dp[0]
    cdef i64[:] beta = dp[1]
    cdef i64[:] gamma = dp[2]
    cdef i64[:] beta_pick = dp[3]
    cdef i64[:] gamma_pick1 = dp[4]
    cdef i64[:] gamma_pick2 = dp[5]
    cdef i64[:] nchild = dp[6]
    cdef i64[:] sum_abg = dp[7]
    cdef i64[:] sum_ag = dp[8]
    cdef i64[:] sum_g = dp[9]
    cdef i64[:] ginf_cnt = dp[10]
    cdef i64[:] ginf_child = dp[11]
    cdef i64[:] best_b = dp[12]
    cdef i64[:] d1 = dp[13]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] d2_a = np.full(n, C_INF, np.int64)
    cdef i64[:] d2 = d2_a
    cdef i64 idx, a, b, g, u, mabg, mag, d
    for v in range(n):
        beta_pick[v] = -1
        gamma_pick1[v] = -1
        gamma_pick2[v] = -1
        ginf_child[v] = -1
        best_b[v] = C_INF
        d1[v] = C_INF

    for idx in range(n - 1, -1, -1):
        v = order[idx]
        if nchild[v] == 0:
            a, b, g = 1, C_INF, C_INF
        else:
            a = 1 + sum_abg[v]
            if ginf_cnt[v] == 0:
                b = sum_g[v] + best_b[v]
            elif ginf_cnt[v] == 1:
                u = ginf_child[v]
                b = alpha[u] + sum_g[v]
                beta_pick[v] = u
            else:
                b = C_INF
            if nchild[v] >= 2:
                g = sum_ag[v] + d1[v] + d2[v]
            else:
                g = C_INF
        alpha[v] = a
        beta[v] = b
        gamma[v] = g
        p = parent[v]
        if p >= 0:
            nchild[p] += 1
            mabg = a if a <= b and a <= g else (b if b <= g else g)
            sum_abg[p] += mabg
            mag = a if a <= g else g
            sum_ag[p] += mag
            if g >= C_INF:
                ginf_cnt[p] += 1
                if ginf_child[p] < 0 or v < ginf_child[p]:
                    ginf_child[p] = v
            else:
                sum_g[p] += g
                if a - g < best_b[p]:
                    best_b[p] = a - g
                    beta_pick[p] = v
            d = a - mag
            if d < d1[p] or (d == d1[p] and
                             (gamma_pick1[p] < 0 or v < gamma_pick1[p])):
                d2[p] = d1[p]
                gamma_pick2[p] = gamma_pick1[p]
                d1[p] = d
                gamma_pick1[p] = v
            elif d < d2[p] or (d == d2[p] and
                               (gamma_pick2[p] < 0 or v < gamma_pick2[p])):
                d2[p] = d
                gamma_pick2[p] = v

    cdef i64 value = alpha[root] if alpha[root] <= gamma[root] \
        else gamma[root]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] sel_a = np.zeros(n, np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] state_a = np.zeros(n, np.int64)
    cdef i64[:] selected = sel_a
    cdef i64[:] state = state_a
    cdef i64 st, x
    state[root] = 1 if alpha[root] <= gamma[root] else 3
    for idx in range(n):
        v = order[idx]
        st = state[v]
        if st == 1:
            selected[v] = 1
        for j in range(offs[v], offs[v + 1]):
            x = nbrs[j]
            if x == parent[v]:
                continue
            if st == 1:
                if alpha[x] <= beta[x] and alpha[x] <= gamma[x]:
                    state[x] = 1
                elif beta[x] <= gamma[x]:
                    state[x] = 2
                else:
                    state[x] = 3
            elif st == 2:
                state[x] = 1 if x == beta_pick[v] else 3
            else:
                if x == gamma_pick1[v] or x == gamma_pick2[v] or \
                        alpha[x] <= gamma[x]:
                    state[x] = 1
                else:
                    state[x] = 3
    return int(value), sel_a
