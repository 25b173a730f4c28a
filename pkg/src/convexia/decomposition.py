"""Recognition and decomposition of tree-cographs and P4-sparse graphs,
with the class formulas for the geodetic and 2-geodetic numbers."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .errors import DomainError
from .graph import Graph, complement, components, induced_subgraph, is_tree
from .oracle import WitnessedNumber, is_convexity_set
from .trees import (cotree_2geodetic_number, cotree_geodetic_number,
                    tree_2geodetic_number, tree_geodetic_number)


class NodeKind(Enum):
    UNION = "union"
    JOIN = "join"
    TREE_LEAF = "tree-leaf"
    COTREE_LEAF = "cotree-leaf"
    SPIDER = "spider"


@dataclass(frozen=True)
class SpiderPartition:
    """The (S, K, R) spider partition, in the labels of the host graph."""

    feet: tuple[int, ...]
    body: tuple[int, ...]
    head: tuple[int, ...]
    thin: bool


@dataclass
class DecompositionTree:
    kind: NodeKind
    graph: Graph                      # induced subgraph, local labels 0..k-1
    vertices: tuple[int, ...]         # local label -> original vertex
    children: list = field(default_factory=list)
    spider: Optional[SpiderPartition] = None   # local labels

    def describe(self) -> str:
        if self.kind is NodeKind.SPIDER:
            tag = "thin-spider" if self.spider.thin else "thick-spider"
            return f"{tag}({len(self.vertices)})"
        return f"{self.kind.value}({len(self.vertices)})"


def _leaf(kind: NodeKind, g: Graph, vertices) -> DecompositionTree:
    return DecompositionTree(kind, g, tuple(vertices))


def _split(g: Graph, vertices, parts, recurse):
    children = []
    for part in parts:
        sub, back = induced_subgraph(g, part)
        child = recurse(sub, tuple(vertices[v] for v in back))
        if child is None:
            return None
        children.append(child)
    return children


# ---------------------------------------------------------------------------
# tree-cographs
# ---------------------------------------------------------------------------

def decompose_tree_cograph(g: Graph) -> Optional[DecompositionTree]:
    """Decomposition tree of a tree-cograph, or None when g is not one."""

    def rec(h: Graph, vertices) -> Optional[DecompositionTree]:
        if is_tree(h):
            return _leaf(NodeKind.TREE_LEAF, h, vertices)
        if is_tree(complement(h)):
            return _leaf(NodeKind.COTREE_LEAF, h, vertices)
        comps = components(h)
        if len(comps) > 1:
            children = _split(h, vertices, comps, rec)
            if children is None:
                return None
            return DecompositionTree(NodeKind.UNION, h, tuple(vertices), children)
        cocomps = components(complement(h))
        if len(cocomps) > 1:
            children = _split(h, vertices, cocomps, rec)
            if children is None:
                return None
            return DecompositionTree(NodeKind.JOIN, h, tuple(vertices), children)
        return None

    return rec(g, tuple(range(g.n)))


# ---------------------------------------------------------------------------
# P4-sparse graphs
# ---------------------------------------------------------------------------

def _thin_spider_partition(h: Graph) -> Optional[tuple[tuple, tuple, tuple]]:
    """(feet, body, head) if h is a thin spider, else None."""
    feet = sorted(v for v in range(h.n) if h.degree(v) == 1)
    if len(feet) < 2:
        return None
    body = []
    for f in feet:
        (p,) = h.adj[f]
        body.append(p)
    if len(set(body)) != len(feet) or set(body) & set(feet):
        return None
    body_set = set(body)
    head = [v for v in range(h.n) if v not in body_set and v not in set(feet)]
    for a, b in itertools.combinations(sorted(body_set), 2):
        if not h.has_edge(a, b):
            return None
    for r in head:
        for k in body_set:
            if not h.has_edge(r, k):
                return None
    return tuple(feet), tuple(sorted(body_set)), tuple(head)


def _spider(h: Graph) -> Optional[SpiderPartition]:
    thin = _thin_spider_partition(h)
    if thin is not None:
        return SpiderPartition(*thin, thin=True)
    thick = _thin_spider_partition(complement(h))
    if thick is not None:
        feet_c, body_c, head_c = thick
        # complementing swaps the roles of feet and body
        return SpiderPartition(body_c, feet_c, head_c, thin=False)
    return None


def decompose_p4_sparse(g: Graph) -> Optional[DecompositionTree]:
    """Decomposition tree of a P4-sparse graph, or None when g is not one."""

    def rec(h: Graph, vertices) -> Optional[DecompositionTree]:
        comps = components(h)
        if len(comps) > 1:
            children = _split(h, vertices, comps, rec)
            if children is None:
                return None
            return DecompositionTree(NodeKind.UNION, h, tuple(vertices), children)
        cocomps = components(complement(h))
        if len(cocomps) > 1:
            children = _split(h, vertices, cocomps, rec)
            if children is None:
                return None
            return DecompositionTree(NodeKind.JOIN, h, tuple(vertices), children)
        if h.n == 1:
            return _leaf(NodeKind.TREE_LEAF, h, vertices)
        spider = _spider(h)
        if spider is not None:
            children = []
            if spider.head:
                children = _split(h, vertices, [spider.head], rec)
                if children is None:
                    return None
            return DecompositionTree(NodeKind.SPIDER, h, tuple(vertices),
                                     children, spider)
        return None

    return rec(g, tuple(range(g.n)))


# ---------------------------------------------------------------------------
# class formulas
# ---------------------------------------------------------------------------

def _first_nonadjacent_pair(h: Graph) -> tuple[int, int]:
    for u in range(h.n):
        for v in range(u + 1, h.n):
            if not h.has_edge(u, v):
                return u, v
    raise DomainError("graph is complete; no nonadjacent pair")


def _eval_node(node: DecompositionTree, kind: str) -> WitnessedNumber:
    """Value + witness in ORIGINAL labels; kind is 'g' or 'g2'."""
    h = node.graph
    verts = node.vertices
    if node.kind is NodeKind.TREE_LEAF:
        wn = tree_geodetic_number(h) if kind == "g" else tree_2geodetic_number(h)
        return WitnessedNumber(wn.value, tuple(verts[v] for v in wn.witness))
    if node.kind is NodeKind.COTREE_LEAF:
        t = complement(h)
        wn = (cotree_geodetic_number(t) if kind == "g"
              else cotree_2geodetic_number(t))
        return WitnessedNumber(wn.value, tuple(verts[v] for v in wn.witness))
    if node.kind is NodeKind.UNION:
        total = 0
        witness = []
        for child in node.children:
            wn = _eval_node(child, kind)
            total += wn.value
            witness.extend(wn.witness)
        return WitnessedNumber(total, tuple(witness))
    if node.kind is NodeKind.JOIN:
        big = [c for c in node.children if len(c.vertices) >= 2]
        if not big:  # the node is a clique
            return WitnessedNumber(h.n, verts)
        child_vals = [_eval_node(c, "g2") for c in big]
        best_i = min(range(len(big)), key=lambda i: (child_vals[i].value, i))
        best = child_vals[best_i]
        if len(big) == 1 or best.value <= 4:
            return best
        # two nonadjacent vertices in each of the first two big co-components
        witness = []
        for c in big[:2]:
            u, v = _first_nonadjacent_pair(c.graph)
            witness.extend((c.vertices[u], c.vertices[v]))
        return WitnessedNumber(4, tuple(witness))
    if node.kind is NodeKind.SPIDER:
        sp = node.spider
        feet = tuple(verts[v] for v in sp.feet)
        if sp.head:
            head_wn = _eval_node(node.children[0], "g2")
            return WitnessedNumber(len(feet) + head_wn.value,
                                   feet + head_wn.witness)
        if sp.thin:
            if kind == "g":
                return WitnessedNumber(len(feet), feet)
            extra = verts[sp.body[0]]
            return WitnessedNumber(len(feet) + 1, feet + (extra,))
        # thick spider, empty head
        if len(sp.feet) == 2:  # the graph is a P4
            if kind == "g":
                return WitnessedNumber(2, feet)
            for b in sp.body:
                cand = sp.feet + (b,)
                if is_convexity_set(h, cand, "2-geodetic"):
                    return WitnessedNumber(3, tuple(verts[v] for v in cand))
            raise DomainError("internal: thick spider witness failed")
        return WitnessedNumber(len(feet), feet)
    raise DomainError(f"unknown node kind {node.kind}")  # pragma: no cover


_KIND_MAP = {"g": "geodetic", "geodetic": "geodetic",
             "g2": "2-geodetic", "2-geodetic": "2-geodetic"}


def _class_number(g: Graph, tree: Optional[DecompositionTree], kind: str,
                  class_name: str) -> WitnessedNumber:
    if kind not in _KIND_MAP:
        raise ValueError(f"kind must be one of {sorted(_KIND_MAP)}")
    full_kind = _KIND_MAP[kind]
    short = "g" if full_kind == "geodetic" else "g2"
    if tree is None:
        raise DomainError(f"graph is not a {class_name}")
    wn = _eval_node(tree, short)
    if not is_convexity_set(g, wn.witness, full_kind):
        raise DomainError(
            f"internal: {class_name} witness failed re-verification")
    return wn


def tree_cograph_number(g: Graph, kind: str) -> WitnessedNumber:
    """g or g2 of a tree-cograph; kind in {'geodetic','2-geodetic'}."""
    return _class_number(g, decompose_tree_cograph(g), kind, "tree-cograph")


def p4_sparse_number(g: Graph, kind: str) -> WitnessedNumber:
    """g or g2 of a P4-sparse graph; kind in {'geodetic','2-geodetic'}."""
    return _class_number(g, decompose_p4_sparse(g), kind, "P4-sparse graph")
