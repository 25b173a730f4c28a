"""Pure-Python implementations of the hot kernels.

Same contracts as the compiled `_fastcore` extension; `kernel` picks one at
import time.  Graphs enter as per-vertex neighbor bitmasks.
"""

from __future__ import annotations

BACKEND = "pure"

_INF = 1 << 60


def all_pairs_dist(n: int, masks) -> list[list[int]]:
    """BFS distance matrix; -1 marks unreachable pairs."""
    out = []
    full = (1 << n) - 1
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = 1 << s
        seen = frontier
        d = 0
        while frontier and seen != full:
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= masks[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                dist[v] = d
        out.append(dist)
    return out


def geodesic_pair_masks(n: int, masks) -> list[list[int]]:
    """mask[x][y] = vertices on some x,y-geodesic (incl. endpoints)."""
    dist = all_pairs_dist(n, masks)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        dx = dist[x]
        out[x][x] = 1 << x
        for y in range(x + 1, n):
            dxy = dx[y]
            if dxy < 0:
                continue
            dy = dist[y]
            m = 0
            for z in range(n):
                if dx[z] >= 0 and dy[z] >= 0 and dx[z] + dy[z] == dxy:
                    m |= 1 << z
            out[x][y] = m
            out[y][x] = m
    return out


def chordless_pair_masks(n: int, masks) -> list[list[int]]:
    """mask[x][y] = vertices on some chordless x,y-path (incl. endpoints).

    DFS over induced paths: a path is only extended by neighbors of its last
    vertex that are nonadjacent to every earlier path vertex.
    """
    out = [[0] * n for _ in range(n)]
    closed = [masks[v] | (1 << v) for v in range(n)]
    for x in range(n):
        out[x][x] = 1 << x
        for y in range(x + 1, n):
            ybit = 1 << y
            if masks[x] & ybit:
                out[x][y] = out[y][x] = (1 << x) | ybit
                continue
            acc = 0
            # stack entries: (last, path_mask, banned_mask)
            stack = [(x, 1 << x, 0)]
            while stack:
                last, path, banned = stack.pop()
                cands = masks[last] & ~banned & ~path
                if cands & ybit:
                    acc |= path | ybit
                    cands &= ~ybit
                nbanned = banned | closed[last]
                while cands:
                    w = (cands & -cands).bit_length() - 1
                    cands &= cands - 1
                    stack.append((w, path | (1 << w), nbanned))
            out[x][y] = out[y][x] = acc
    return out


def connected_mask_table(n: int, masks) -> bytearray:
    """table[m] = 1 iff the induced subgraph on bitmask m is nonempty and
    connected."""
    size = 1 << n
    table = bytearray(size)
    for m in range(1, size):
        low = m & -m
        reach = low
        while True:
            grow = reach
            mm = reach
            while mm:
                v = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                grow |= masks[v]
            grow &= m
            if grow == reach:
                break
            reach = grow
        if reach == m:
            table[m] = 1
    return table


def tree_g2(n: int, offsets, neighbors, root: int = 0):
    """Minimum 2-geodetic set of a tree given as a CSR adjacency.

    Returns (value, selected) where selected is a list of 0/1 flags.  Uses a
    three-state subtree DP: a vertex is selected; unselected with one
    selected child (needs a selected parent); or unselected with at least
    two selected children.
    """
    offs = list(offsets)
    nbrs = list(neighbors)
    parent = [-1] * n
    order = [0] * n
    order[0] = root
    parent[root] = root
    k = 1
    i = 0
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

    alpha = [0] * n
    beta = [0] * n
    gamma = [0] * n
    beta_pick = [-1] * n
    gamma_pick1 = [-1] * n
    gamma_pick2 = [-1] * n
    nchild = [0] * n
    sum_abg = [0] * n   # sum over children of min(alpha, beta, gamma)
    sum_ag = [0] * n    # sum over children of min(alpha, gamma)
    sum_g = [0] * n     # sum over children of gamma (finite part)
    ginf_cnt = [0] * n
    ginf_child = [-1] * n
    best_b = [_INF] * n     # min over children of alpha - gamma (for beta)
    d1 = [_INF] * n         # two smallest alpha - min(alpha, gamma)
    d2 = [_INF] * n

    for idx in range(n - 1, -1, -1):
        v = order[idx]
        if nchild[v] == 0:
            a, b, g = 1, _INF, _INF
        else:
            a = 1 + sum_abg[v]
            if ginf_cnt[v] == 0:
                b = sum_g[v] + best_b[v]
            elif ginf_cnt[v] == 1:
                u = ginf_child[v]
                b = alpha[u] + sum_g[v]
                beta_pick[v] = u
            else:
                b = _INF
            if nchild[v] >= 2:
                g = sum_ag[v] + d1[v] + d2[v]
            else:
                g = _INF
        alpha[v], beta[v], gamma[v] = a, b, g
        p = parent[v]
        if p >= 0:
            nchild[p] += 1
            mabg = a if a <= b and a <= g else (b if b <= g else g)
            sum_abg[p] += mabg
            mag = a if a <= g else g
            sum_ag[p] += mag
            if g >= _INF:
                ginf_cnt[p] += 1
                if ginf_child[p] < 0 or v < ginf_child[p]:
                    ginf_child[p] = v
            else:
                sum_g[p] += g
                if a - g < best_b[p]:
                    best_b[p] = a - g
                    beta_pick[p] = v
            d = a - mag
            # keep the two smallest d values; smaller index wins ties
            if d < d1[p] or (d == d1[p] and (gamma_pick1[p] < 0 or v < gamma_pick1[p])):
                d2[p], gamma_pick2[p] = d1[p], gamma_pick1[p]
                d1[p], gamma_pick1[p] = d, v
            elif d < d2[p] or (d == d2[p] and (gamma_pick2[p] < 0 or v < gamma_pick2[p])):
                d2[p], gamma_pick2[p] = d, v

    value = alpha[root] if alpha[root] <= gamma[root] else gamma[root]
    selected = [0] * n
    state = [0] * n  # 1 = alpha, 2 = beta, 3 = gamma
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
                if x == gamma_pick1[v] or x == gamma_pick2[v] or alpha[x] <= gamma[x]:
                    state[x] = 1
                else:
                    state[x] = 3
    return value, selected
