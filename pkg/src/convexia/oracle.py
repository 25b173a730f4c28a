"""Geodesic intervals, monophonic closures, Steiner machinery and the exact
brute-force oracles.

Everything here is ground truth: the class-specific algorithms elsewhere in
the package are tested against these subset-enumeration searches.  The
oracles are capped (default n <= 16) and raise BudgetError beyond that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import kernel
from .errors import BudgetError, DomainError
from .graph import Graph, components, induced_subgraph, is_connected, \
    simplicial_vertices

DEFAULT_CAP = 16

KINDS = ("geodetic", "2-geodetic", "monophonic", "steiner")


@dataclass(frozen=True)
class WitnessedNumber:
    """An invariant value together with a vertex set certifying it."""

    value: int
    witness: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "witness", tuple(sorted(self.witness)))


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(out)


@lru_cache(maxsize=512)
def _geo_masks(g: Graph):
    return kernel.geodesic_pair_masks(g.n, g.masks)


@lru_cache(maxsize=512)
def _chordless_masks(g: Graph):
    return kernel.chordless_pair_masks(g.n, g.masks)


@lru_cache(maxsize=64)
def _conn_table(g: Graph):
    return kernel.connected_mask_table(g.n, g.masks)


def _check_vertices(g: Graph, s: Iterable[int]) -> list[int]:
    vs = sorted(set(s))
    for v in vs:
        if not (0 <= v < g.n):
            raise DomainError(f"vertex {v} outside 0..{g.n - 1}")
    return vs


def _require_cap(g: Graph, cap: int, what: str):
    if g.n > cap:
        raise BudgetError(f"{what} needs exhaustive search over n={g.n} vertices",
                          cap=cap)


# ---------------------------------------------------------------------------
# intervals and closures
# ---------------------------------------------------------------------------

def geodetic_interval(g: Graph, s: Iterable[int]) -> tuple[int, ...]:
    """I(S): S plus every vertex on a geodesic between two members of S."""
    vs = _check_vertices(g, s)
    gm = _geo_masks(g)
    acc = _mask(vs)
    for x, y in itertools.combinations(vs, 2):
        acc |= gm[x][y]
    return _bits(acc)


def monophonic_closure(g: Graph, s: Iterable[int],
                       cap: int = DEFAULT_CAP) -> tuple[int, ...]:
    """J(S): S plus every vertex on a chordless path between members of S."""
    _require_cap(g, cap, "monophonic closure")
    vs = _check_vertices(g, s)
    jm = _chordless_masks(g)
    acc = _mask(vs)
    for x, y in itertools.combinations(vs, 2):
        acc |= jm[x][y]
    return _bits(acc)


# ---------------------------------------------------------------------------
# Steiner machinery
# ---------------------------------------------------------------------------

def steiner_distance(g: Graph, w: Iterable[int]) -> int:
    """Minimum edge count of a connected subgraph containing all of w.

    Dreyfus-Wagner dynamic program over (terminal subset, attachment vertex)
    states; capped at 16 terminals.
    """
    terms = _check_vertices(g, w)
    if not terms:
        raise DomainError("steiner distance needs at least one terminal")
    if len(terms) > 16:
        raise BudgetError("too many Steiner terminals", cap=16)
    if not is_connected(g):
        raise DomainError("steiner distance is defined for connected graphs")
    k = len(terms)
    if k == 1:
        return 0
    n = g.n
    dist = kernel.all_pairs_dist(n, g.masks)
    INF = 1 << 30
    full = (1 << k) - 1
    dp = [[INF] * n for _ in range(full + 1)]
    for i, t in enumerate(terms):
        for v in range(n):
            dp[1 << i][v] = dist[t][v]
    for sub in range(1, full + 1):
        if sub & (sub - 1) == 0:
            continue
        row = dp[sub]
        # merge two subtrees at the same attachment vertex
        s1 = (sub - 1) & sub
        while s1:
            s2 = sub ^ s1
            if s1 > s2:
                r1, r2 = dp[s1], dp[s2]
                for v in range(n):
                    c = r1[v] + r2[v]
                    if c < row[v]:
                        row[v] = c
            s1 = (s1 - 1) & sub
        # extend by a shortest path to a new attachment vertex
        base = list(row)
        for v in range(n):
            best = row[v]
            dv = dist[v]
            for u in range(n):
                c = base[u] + dv[u]
                if c < best:
                    best = c
            row[v] = best
    return min(dp[full])


def steiner_interval(g: Graph, w: Iterable[int]) -> tuple[int, ...]:
    """S(W): vertices lying in some Steiner W-tree.

    v belongs to a Steiner W-tree iff adding v as a terminal does not
    increase the Steiner distance.
    """
    terms = _check_vertices(g, w)
    sd = steiner_distance(g, terms)
    term_set = set(terms)
    out = []
    for v in range(g.n):
        if v in term_set or steiner_distance(g, terms + [v]) == sd:
            out.append(v)
    return tuple(out)


def _steiner_sweep(g: Graph, wmask: int) -> tuple[int, int]:
    """(steiner distance, interval mask) via connected-superset enumeration.

    Independent of the Dreyfus-Wagner route; used by the oracle.
    """
    conn = _conn_table(g)
    full = (1 << g.n) - 1
    rest = full & ~wmask
    best = g.n + 1
    acc = 0
    sub = rest
    while True:
        m = wmask | sub
        if conn[m]:
            pc = m.bit_count()
            if pc < best:
                best = pc
                acc = m
            elif pc == best:
                acc |= m
        if sub == 0:
            break
        sub = (sub - 1) & rest
    if best > g.n:
        raise DomainError("terminals are not in one component")
    return best - 1, acc


# ---------------------------------------------------------------------------
# predicates and oracles
# ---------------------------------------------------------------------------

def _full(g: Graph) -> int:
    return (1 << g.n) - 1


def _is_set_masked(g: Graph, smask: int, kind: str, cap: int) -> bool:
    if kind == "geodetic":
        gm = _geo_masks(g)
        acc = smask
        vs = _bits(smask)
        for x, y in itertools.combinations(vs, 2):
            acc |= gm[x][y]
        return acc == _full(g)
    if kind == "2-geodetic":
        masks = g.masks
        for v in range(g.n):
            bit = 1 << v
            if smask & bit:
                continue
            nb = masks[v] & smask
            ok = False
            mm = nb
            while mm:
                a = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                if nb & ~(masks[a] | (1 << a)):
                    ok = True
                    break
            if not ok:
                return False
        return True
    if kind == "monophonic":
        _require_cap(g, cap, "monophonic check")
        jm = _chordless_masks(g)
        acc = smask
        vs = _bits(smask)
        for x, y in itertools.combinations(vs, 2):
            acc |= jm[x][y]
        return acc == _full(g)
    if kind == "steiner":
        if not is_connected(g):
            raise DomainError("steiner sets are defined for connected graphs")
        _require_cap(g, cap, "steiner check")
        if smask == 0:
            return g.n == 0
        _, interval = _steiner_sweep(g, smask)
        return interval == _full(g)
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def is_convexity_set(g: Graph, s: Iterable[int], kind: str,
                     cap: int = DEFAULT_CAP) -> bool:
    """Does s qualify as a geodetic / 2-geodetic / monophonic / Steiner set?"""
    vs = _check_vertices(g, s)
    return _is_set_masked(g, _mask(vs), kind, cap)


def min_convexity_number(g: Graph, kind: str,
                         cap: int = DEFAULT_CAP) -> WitnessedNumber:
    """Exact minimum set size by ascending subset enumeration.

    Simplicial vertices are forced into the search (they are endpoints of
    every geodesic, chordless path and Steiner tree, so they belong to
    every qualifying set).  First hit in ascending-cardinality lexicographic
    order is returned, making witnesses deterministic.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if g.n == 0:
        raise DomainError("empty graph has no convexity numbers")
    if not is_connected(g):
        if kind == "steiner":
            raise DomainError("steiner number undefined for disconnected graphs")
        total = 0
        witness: list[int] = []
        for comp in components(g):
            sub, back = induced_subgraph(g, comp)
            wn = min_convexity_number(sub, kind, cap)
            total += wn.value
            witness.extend(back[v] for v in wn.witness)
        return WitnessedNumber(total, tuple(witness))
    _require_cap(g, cap, f"{kind} oracle")
    forced = list(simplicial_vertices(g))
    forced_mask = _mask(forced)
    free = [v for v in range(g.n) if not (forced_mask >> v) & 1]
    for k in range(max(len(forced), 1), g.n + 1):
        extra = k - len(forced)
        if extra < 0:
            continue
        for combo in itertools.combinations(free, extra):
            smask = forced_mask | _mask(combo)
            if _is_set_masked(g, smask, kind, cap):
                return WitnessedNumber(k, _bits(smask))
    raise DomainError(f"no {kind} set exists")  # pragma: no cover


def max_proper_monophonically_convex(g: Graph,
                                     cap: int = DEFAULT_CAP) -> WitnessedNumber:
    """c_m(G): largest proper subset C with J(C) = C."""
    if g.n == 0:
        raise DomainError("empty graph has no convex subsets")
    _require_cap(g, cap, "monophonic convexity oracle")
    jm = _chordless_masks(g)
    verts = list(range(g.n))
    for size in range(g.n - 1, -1, -1):
        for combo in itertools.combinations(verts, size):
            cmask = _mask(combo)
            ok = True
            for x, y in itertools.combinations(combo, 2):
                if jm[x][y] & ~cmask:
                    ok = False
                    break
            if ok:
                return WitnessedNumber(size, combo)
    raise DomainError("unreachable")  # pragma: no cover
