"""Immutable simple undirected graphs plus serialization and basic queries.

Vertices are always 0..n-1.  Set-valued results come back as sorted tuples
so every caller sees deterministic output.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Optional, Sequence

from .errors import GraphParseError, GraphRangeError, DomainError

VertexSet = frozenset  # alias for documentation purposes


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Immutable after construction.  Adjacency sets, neighbor bitmasks and a
    CSR view are built lazily so that million-vertex graphs stay cheap to
    create from an edge array.
    """

    __slots__ = ("n", "_edges", "labels", "_adj", "_masks", "_csr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphRangeError(f"edge ({u},{v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self._edges = tuple(sorted(seen))
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise ValueError("labels length must equal n")
        self._adj = None
        self._masks = None
        self._csr = None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]],
                       labels: Optional[Sequence[str]] = None) -> "Graph":
        n = len(adj)
        edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
        g = cls(n, edges, labels)
        # sanity: symmetric input
        for u in range(n):
            for v in adj[u]:
                if u not in adj[v]:
                    raise ValueError(f"asymmetric adjacency: {u}->{v}")
        return g

    # -- views ---------------------------------------------------------------

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def adj(self) -> tuple[frozenset, ...]:
        if self._adj is None:
            sets = [set() for _ in range(self.n)]
            for u, v in self._edges:
                sets[u].add(v)
                sets[v].add(u)
            self._adj = tuple(frozenset(s) for s in sets)
        return self._adj

    @property
    def masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmask."""
        if self._masks is None:
            m = [0] * self.n
            for u, v in self._edges:
                m[u] |= 1 << v
                m[v] |= 1 << u
            self._masks = tuple(m)
        return self._masks

    def csr(self):
        """(offsets, neighbors) int32 numpy arrays, neighbors sorted per row."""
        if self._csr is None:
            import itertools

            import numpy as np

            flat = np.fromiter(itertools.chain.from_iterable(self._edges),
                               dtype=np.int64, count=2 * self.m)
            us, vs = flat[0::2], flat[1::2]
            src = np.concatenate([us, vs])
            dst = np.concatenate([vs, us])
            # radix sort on a combined key keeps rows sorted by neighbor
            order = np.argsort(src * (self.n + 1) + dst, kind="stable")
            src = src[order]
            dst = dst[order].astype(np.int32)
            offsets = np.zeros(self.n + 1, dtype=np.int64)
            if self.m:
                offsets[1:] = np.bincount(src, minlength=self.n)
            np.cumsum(offsets, out=offsets)
            self._csr = (offsets, dst)
        return self._csr

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n
                and self._edges == other._edges)

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# serialization: graph6 and edge lists
# ---------------------------------------------------------------------------

def _graph6_encode(g: Graph) -> str:
    if g.n > 62:
        raise DomainError("graph6 support is limited to n<=62")
    out = [chr(g.n + 63)]
    bits = []
    adj = g.adj
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if j in adj[i] else 0)
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def _graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 string", offset=0)
    first = ord(s[0]) - 63
    if first == 63:
        raise GraphParseError("graph6 n>62 is not supported", offset=0)
    if not (0 <= first <= 62):
        raise GraphParseError(f"bad graph6 header character {s[0]!r}", offset=0)
    n = first
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise GraphParseError(
            f"graph6 body has {len(body)} characters, expected {need}",
            offset=1 + min(len(body), need))
    bits = []
    for idx, ch in enumerate(body):
        val = ord(ch) - 63
        if not (0 <= val <= 63):
            raise GraphParseError(f"bad graph6 character {ch!r}", offset=1 + idx)
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def _edgelist_decode(text: str) -> Graph:
    n_declared = None
    edges = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            try:
                n_declared = int(line[2:])
            except ValueError:
                raise GraphParseError(f"bad n= line {raw!r} (line {lineno})")
            if n_declared < 0:
                raise GraphRangeError(f"negative n= value (line {lineno})")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v' pair, got {raw!r} (line {lineno})")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {raw!r} (line {lineno})")
        if u < 0 or v < 0:
            raise GraphRangeError(f"negative vertex index (line {lineno})")
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    if n_declared is not None:
        if max_seen >= n_declared:
            raise GraphRangeError(
                f"vertex {max_seen} out of declared range n={n_declared}")
        n = n_declared
    else:
        n = max_seen + 1
    return Graph(n, edges)


def _edgelist_encode(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


_FORMATS = ("graph6", "edge-list")


def load_graph(text: str, fmt: str = "graph6") -> Graph:
    """Parse `text` in the given format ('graph6' or 'edge-list')."""
    if fmt == "graph6":
        return _graph6_decode(text)
    if fmt in ("edge-list", "edges"):
        return _edgelist_decode(text)
    raise ValueError(f"unknown format {fmt!r}; expected one of {_FORMATS}")


def serialize_graph(g: Graph, fmt: str = "graph6") -> str:
    if fmt == "graph6":
        return _graph6_encode(g)
    if fmt in ("edge-list", "edges"):
        return _edgelist_encode(g)
    raise ValueError(f"unknown format {fmt!r}; expected one of {_FORMATS}")


# ---------------------------------------------------------------------------
# elementary queries
# ---------------------------------------------------------------------------

def complement(g: Graph) -> Graph:
    edges = [(i, j) for i in range(g.n) for j in range(i + 1, g.n)
             if j not in g.adj[i]]
    return Graph(g.n, edges, g.labels)


def components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted tuples, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.adj[u]:
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def distances(g: Graph, source: int) -> list:
    """BFS distances from `source`; unreachable vertices get math.inf."""
    dist = [math.inf] * g.n
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for v in g.adj[u]:
            if dist[v] is math.inf or dist[v] == math.inf:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def diameter(g: Graph):
    """Max pairwise BFS distance; math.inf when g is disconnected or empty."""
    if g.n == 0:
        return math.inf
    best = 0
    for s in range(g.n):
        d = distances(g, s)
        worst = max(d)
        if worst == math.inf:
            return math.inf
        best = max(best, worst)
    return best


def simplicial_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices whose neighborhood induces a clique (sorted)."""
    out = []
    for v in range(g.n):
        nb = sorted(g.adj[v])
        ok = all(nb[j] in g.adj[nb[i]]
                 for i in range(len(nb)) for j in range(i + 1, len(nb)))
        if ok:
            out.append(v)
    return tuple(out)


def is_tree(g: Graph) -> bool:
    """Connected with n-1 edges; K1 and K2 count as trees."""
    if g.n == 0:
        return False
    return g.m == g.n - 1 and is_connected(g)


def leaves(g: Graph) -> tuple[int, ...]:
    """Degree-1 vertices; the single vertex of K1 counts as a leaf."""
    if g.n == 1:
        return (0,)
    return tuple(v for v in range(g.n) if g.degree(v) == 1)


def is_chordal(g: Graph) -> bool:
    """Perfect-elimination check via maximum cardinality search."""
    n = g.n
    if n <= 2:
        return True
    weight = [0] * n
    order = []
    numbered = [False] * n
    for _ in range(n):
        v = max((u for u in range(n) if not numbered[u]),
                key=lambda u: (weight[u], -u))
        numbered[v] = True
        order.append(v)
        for w in g.adj[v]:
            if not numbered[w]:
                weight[w] += 1
    # reverse MCS order is a candidate perfect elimination ordering
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [w for w in g.adj[v] if pos[w] < pos[v]]
        if not earlier:
            continue
        u = max(earlier, key=lambda w: pos[w])
        for w in earlier:
            if w != u and w not in g.adj[u]:
                return False
    return True


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph plus the list mapping new index -> old index."""
    vs = sorted(set(vertices))
    index = {v: i for i, v in enumerate(vs)}
    edges = [(index[u], index[v]) for u, v in g.edges
             if u in index and v in index]
    labels = None
    if g.labels is not None:
        labels = [g.labels[v] for v in vs]
    return Graph(len(vs), edges, labels), vs
