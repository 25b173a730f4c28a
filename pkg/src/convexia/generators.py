"""Seeded instance generators used by the CLI and the verification suites."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Optional

from .atfree import IntervalFamily, intervals_to_graph
from .errors import DomainError
from .graph import Graph, complement
from .permutation import PermutationDiagram


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform random recursive tree: vertex i attaches to a random earlier
    vertex."""
    if n < 1:
        raise DomainError("a tree needs at least one vertex")
    edges = [(i, rng.randrange(i)) for i in range(1, n)]
    return Graph(n, edges)


def random_permutation(n: int, rng: random.Random) -> PermutationDiagram:
    pi = list(range(1, n + 1))
    rng.shuffle(pi)
    return PermutationDiagram(tuple(pi))


def random_unit_interval_family(n: int, rng: random.Random) -> IntervalFamily:
    """n unit intervals with random left endpoints on a grid."""
    if n < 1:
        raise DomainError("need at least one interval")
    lefts = sorted(Fraction(rng.randrange(0, 4 * n), 10) for _ in range(n))
    intervals = tuple((left, left + 1) for left in lefts)
    labels = tuple(f"I{i + 1}" for i in range(n))
    return IntervalFamily(intervals, labels)


def random_unit_interval_graph(n: int, rng: random.Random) -> Graph:
    return intervals_to_graph(random_unit_interval_family(n, rng))


def spider_graph(feet: int, thin: bool,
                 head: Optional[Graph] = None) -> Graph:
    """Spider with `feet` feet (vertices 0..feet-1), body clique
    feet..2*feet-1, and an optional head graph joined to the body."""
    if feet < 2:
        raise DomainError("a spider needs at least two feet")
    k = feet
    head_n = head.n if head is not None else 0
    n = 2 * k + head_n
    edges = []
    for i in range(k):
        if thin:
            edges.append((i, k + i))
        else:
            edges.extend((i, k + j) for j in range(k) if j != i)
    edges.extend(itertools.combinations(range(k, 2 * k), 2))
    for r in range(2 * k, n):
        edges.extend((r, b) for b in range(k, 2 * k))
    if head is not None:
        edges.extend((u + 2 * k, v + 2 * k) for u, v in head.edges)
    return Graph(n, edges)


def _shift(edges, offset):
    return [(u + offset, v + offset) for u, v in edges]


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p)."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def random_tree_cograph(n: int, rng: random.Random) -> Graph:
    """Random member of the class: tree / co-tree leaves glued by
    union/join."""
    if n <= 3 or rng.random() < 0.35:
        t = random_tree(n, rng)
        return t if rng.random() < 0.5 else complement(t)
    k = rng.randint(1, n - 1)
    a = random_tree_cograph(k, rng)
    b = random_tree_cograph(n - k, rng)
    edges = list(a.edges) + _shift(b.edges, k)
    if rng.random() < 0.5:
        edges += [(u, v + k) for u in range(k) for v in range(b.n)]
    return Graph(n, edges)


def random_p4_sparse(n: int, rng: random.Random) -> Graph:
    """Random member of the class: union/join/spider over singletons."""
    if n == 1:
        return Graph(1, [])
    if n >= 4 and rng.random() < 0.4:
        feet = rng.randint(2, n // 2)
        head_n = n - 2 * feet
        head = random_p4_sparse(head_n, rng) if head_n else None
        return spider_graph(feet, rng.random() < 0.5, head)
    k = rng.randint(1, n - 1)
    a = random_p4_sparse(k, rng)
    b = random_p4_sparse(n - k, rng)
    edges = list(a.edges) + _shift(b.edges, k)
    if rng.random() < 0.5:
        edges += [(u, v + k) for u in range(k) for v in range(b.n)]
    return Graph(n, edges)
