"""Asteroidal triples, AT-free betweenness machinery, theorem harnesses,
the c_m hardness construction, the chordal monophonic shortcut and the
unit-interval gap example."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import BudgetError, DomainError
from .graph import (Graph, components, induced_subgraph, is_chordal,
                    is_connected, serialize_graph, simplicial_vertices)
from .oracle import (DEFAULT_CAP, WitnessedNumber, is_convexity_set,
                     min_convexity_number, steiner_distance)


@dataclass(frozen=True)
class AsteroidalTriple:
    """Three vertices such that each pair is connected by a path avoiding
    the closed neighborhood of the third."""

    x: int
    y: int
    z: int


@dataclass(frozen=True)
class IntervalFamily:
    """Closed intervals with rational endpoints and display labels."""

    intervals: tuple[tuple[Fraction, Fraction], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        for left, right in self.intervals:
            if not left < right:
                raise ValueError(f"degenerate interval [{left},{right}]")
        if len(self.labels) != len(self.intervals):
            raise ValueError("labels length must match intervals")


def intervals_to_graph(family: IntervalFamily) -> Graph:
    """Intersection graph of the family (closed intervals)."""
    iv = family.intervals
    n = len(iv)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if iv[i][0] <= iv[j][1] and iv[j][0] <= iv[i][1]]
    return Graph(n, edges, family.labels)


# ---------------------------------------------------------------------------
# asteroidal triples and betweenness
# ---------------------------------------------------------------------------

def _component_tables(g: Graph) -> list[list[int]]:
    """table[v][u] = component index of u in G - N[v], or -1 if u in N[v]."""
    tables = []
    for v in range(g.n):
        removed = g.adj[v] | {v}
        comp_id = [-1] * g.n
        cid = 0
        for s in range(g.n):
            if s in removed or comp_id[s] >= 0:
                continue
            stack = [s]
            comp_id[s] = cid
            while stack:
                u = stack.pop()
                for w in g.adj[u]:
                    if w not in removed and comp_id[w] < 0:
                        comp_id[w] = cid
                        stack.append(w)
            cid += 1
        tables.append(comp_id)
    return tables


def find_asteroidal_triple(g: Graph) -> Optional[AsteroidalTriple]:
    """Lexicographically first asteroidal triple, or None (AT-free)."""
    tables = _component_tables(g)
    for x, y, z in itertools.combinations(range(g.n), 3):
        if (tables[x][y] >= 0 and tables[x][y] == tables[x][z]
                and tables[y][x] >= 0 and tables[y][x] == tables[y][z]
                and tables[z][x] >= 0 and tables[z][x] == tables[z][y]):
            return AsteroidalTriple(x, y, z)
    return None


def is_at_free(g: Graph) -> bool:
    return find_asteroidal_triple(g) is None


def component_toward(g: Graph, a: int, b: int) -> tuple[int, ...]:
    """C_a(b): the component of G - N[a] containing b; empty when b in N[a]."""
    if b == a or b in g.adj[a]:
        return ()
    removed = g.adj[a] | {a}
    seen = {b}
    stack = [b]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in removed and w not in seen:
                seen.add(w)
                stack.append(w)
    return tuple(sorted(seen))


def between_set(g: Graph, x: int, y: int) -> tuple[int, ...]:
    """Vertices between x and y: C_x(y) intersected with C_y(x)."""
    if x == y or g.has_edge(x, y):
        raise DomainError(f"between_set needs a nonadjacent pair, got {x},{y}")
    cx = set(component_toward(g, x, y))
    cy = set(component_toward(g, y, x))
    return tuple(sorted(cx & cy))


def _set_neighborhood(g: Graph, c: Iterable[int]) -> tuple[int, ...]:
    """N(C): vertices outside C with a neighbor in C."""
    cs = set(c)
    out = set()
    for v in cs:
        out.update(g.adj[v])
    return tuple(sorted(out - cs))


@dataclass(frozen=True)
class ExtremalPair:
    """A nonadjacent pair maximizing the number of between-vertices, with
    the induced partition V = C_x(y) + Delta(x) + A(x) on each side."""

    x: int
    y: int
    between: tuple[int, ...]
    delta_x: tuple[int, ...]
    a_x: tuple[int, ...]
    delta_y: tuple[int, ...]
    a_y: tuple[int, ...]


def _pair_partition(g: Graph, x: int, y: int):
    """(between, delta_x, a_x, delta_y, a_y, joined) for a nonadjacent pair.

    `joined` records whether every A-vertex is adjacent to every
    Delta-vertex on both sides.
    """
    cx = component_toward(g, x, y)
    cy = component_toward(g, y, x)
    bw = tuple(sorted(set(cx) & set(cy)))
    dx = _set_neighborhood(g, cx)
    dy = _set_neighborhood(g, cy)
    ax = tuple(sorted(set(range(g.n)) - set(cx) - set(dx)))
    ay = tuple(sorted(set(range(g.n)) - set(cy) - set(dy)))
    joined = all(g.has_edge(a, d) for a in ax for d in dx) and \
        all(g.has_edge(a, d) for a in ay for d in dy)
    return bw, dx, ax, dy, ay, joined


def extremal_pair(g: Graph) -> ExtremalPair:
    """A nonadjacent pair with the most between-vertices.

    Among the between-count maximizers there can be pairs for which some
    A-vertex misses a Delta-vertex: the join property only follows when
    C_x(y) is an inclusion-maximal component over all G - N[v].  Pairs
    satisfying the join property on both sides are therefore preferred
    outright; between-count and the far-component sizes break ties, then
    the lexicographic order.
    """
    if not is_connected(g):
        raise DomainError("extremal pair needs a connected graph")
    best = None
    best_key = None
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.has_edge(x, y):
                continue
            bw, dx, ax, dy, ay, joined = _pair_partition(g, x, y)
            key = (joined, len(bw),
                   g.n - len(ax) - len(dx) + g.n - len(ay) - len(dy))
            if best is None or key > best_key:
                best = (x, y, bw, dx, ax, dy, ay)
                best_key = key
    if best is None:
        raise DomainError("complete graph has no nonadjacent pair")
    return ExtremalPair(*best)


# ---------------------------------------------------------------------------
# theorem harnesses
# ---------------------------------------------------------------------------

def verify_steiner_implies_geodetic(g: Graph, cap: int = DEFAULT_CAP) -> dict:
    """Check that every minimum Steiner set is geodetic.

    Returns {"graph_id", "g", "s", "violations"}; a nonempty violation list
    would contradict the AT-free inclusion theorem.
    """
    if not is_connected(g):
        raise DomainError("the Steiner number needs a connected graph")
    if not is_at_free(g):
        raise DomainError("graph has an asteroidal triple")
    if g.n > cap:
        raise BudgetError("steiner/geodetic sweep needs exhaustive search",
                          cap=cap)
    s_num = min_convexity_number(g, "steiner", cap)
    g_num = min_convexity_number(g, "geodetic", cap)
    violations = []
    for combo in itertools.combinations(range(g.n), s_num.value):
        if not is_convexity_set(g, combo, "steiner", cap):
            continue
        if not is_convexity_set(g, combo, "geodetic", cap):
            violations.append(list(combo))
    return {
        "graph_id": serialize_graph(g, "graph6"),
        "g": g_num.value,
        "s": s_num.value,
        "violations": violations,
    }


def _has_spanning_caterpillar(h: Graph) -> bool:
    """Does h admit a spanning caterpillar?

    Equivalent to having a (not necessarily induced) path whose closed
    neighborhood is all of h; found by DFS over simple paths.
    """
    if h.n <= 2:
        return is_connected(h)
    if not is_connected(h):
        return False
    full = frozenset(range(h.n))

    def dominates(path_set):
        covered = set(path_set)
        for v in path_set:
            covered.update(h.adj[v])
        return covered == full

    for start in range(h.n):
        stack = [(start, frozenset([start]))]
        while stack:
            last, used = stack.pop()
            if dominates(used):
                return True
            for w in sorted(h.adj[last]):
                if w not in used:
                    stack.append((w, used | {w}))
    return False


def caterpillar_realization(g: Graph, w: Iterable[int],
                            cap: int = DEFAULT_CAP) -> bool:
    """Does every Steiner-W vertex set induce a spanning caterpillar?

    The vertex sets of Steiner W-trees are exactly the connected supersets
    of W with sd(W)+1 vertices.
    """
    if g.n > cap:
        raise BudgetError("caterpillar sweep needs exhaustive search", cap=cap)
    ws = sorted(set(w))
    if not ws:
        raise DomainError("caterpillar check needs at least one terminal")
    size = steiner_distance(g, ws) + 1
    rest = [v for v in range(g.n) if v not in set(ws)]
    for extra in itertools.combinations(rest, size - len(ws)):
        u = sorted(set(ws) | set(extra))
        sub, _ = induced_subgraph(g, u)
        if not is_connected(sub):
            continue
        if not _has_spanning_caterpillar(sub):
            return False
    return True


# ---------------------------------------------------------------------------
# monophonic hardness construction and chordal shortcut
# ---------------------------------------------------------------------------

def cm_reduction(h: Graph) -> Graph:
    """h plus two universal, mutually nonadjacent vertices n and n+1."""
    n = h.n
    edges = list(h.edges)
    for u in (n, n + 1):
        edges.extend((v, u) for v in range(n))
    labels = None
    if h.labels is not None:
        labels = list(h.labels) + ["u*", "v*"]
    return Graph(n + 2, edges, labels)


def clique_number(g: Graph) -> int:
    """Brute-force maximum clique size (desk scale)."""
    best = 0
    order = sorted(range(g.n), key=lambda v: -g.degree(v))

    def extend(clique, cands):
        nonlocal best
        if len(clique) > best:
            best = len(clique)
        for i, v in enumerate(cands):
            if len(clique) + len(cands) - i <= best:
                break
            extend(clique + [v], [u for u in cands[i + 1:] if g.has_edge(u, v)])

    extend([], order)
    return best


def chordal_monophonic_number(g: Graph) -> WitnessedNumber:
    """m(G) of a connected chordal graph: the simplicial vertices."""
    if not is_connected(g):
        raise DomainError("monophonic number needs a connected graph")
    if not is_chordal(g):
        raise DomainError("graph is not chordal")
    simp = simplicial_vertices(g)
    return WitnessedNumber(len(simp), simp)


# ---------------------------------------------------------------------------
# the unit-interval gap example
# ---------------------------------------------------------------------------

def _f(s: str) -> Fraction:
    return Fraction(s)


_BASE_INTERVALS = (
    (_f("0.0"), _f("1.0")),   # I1
    (_f("0.8"), _f("1.8")),   # I2
    (_f("1.6"), _f("2.6")),   # I3
    (_f("0.4"), _f("1.4")),   # I4
    (_f("0.4"), _f("1.4")),   # I5
    (_f("0.4"), _f("1.4")),   # I6
    (_f("1.2"), _f("2.2")),   # I7
    (_f("1.2"), _f("2.2")),   # I8
    (_f("1.2"), _f("2.2")),   # I9
)


def figure1_family(copies: int = 1) -> IntervalFamily:
    """copies disjoint translates of the nine-interval gap example."""
    if copies < 1:
        raise DomainError("need at least one copy")
    intervals = []
    labels = []
    shift = _f("3.0")
    for c in range(copies):
        for i, (left, right) in enumerate(_BASE_INTERVALS):
            intervals.append((left + c * shift, right + c * shift))
            name = f"I{i + 1}"
            labels.append(name if copies == 1 else f"{name}@{c}")
    return IntervalFamily(tuple(intervals), tuple(labels))


def figure1_graph(copies: int = 1) -> tuple[Graph, IntervalFamily]:
    """The nine-vertex unit-interval graph with g=4 < s=5, replicated
    `copies` times so the Steiner/geodetic gap scales linearly."""
    family = figure1_family(copies)
    return intervals_to_graph(family), family
