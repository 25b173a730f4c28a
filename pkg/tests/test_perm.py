import itertools
import random

import pytest

from convexia import (DomainError, JoinFactor, PermutationDiagram, Scanline,
                      is_convexity_set, join_monophonic_number,
                      min_convexity_number, monophonic_membership,
                      permutation_monophonic_number, permutation_to_graph,
                      scanline_separator_set, subdiagram, successional_pairs)
from convexia.generators import random_permutation
from convexia.graph import is_connected


def test_diagram_validation():
    with pytest.raises(DomainError):
        PermutationDiagram((1, 1, 2))
    with pytest.raises(DomainError):
        PermutationDiagram((0, 1, 2))
    d = PermutationDiagram((3, 1, 2))
    assert d.n == 3
    assert d.bottom_positions() == (1, 2, 0)


def test_inversion_graph_examples():
    # P4 as a permutation graph
    assert permutation_to_graph(PermutationDiagram((2, 4, 1, 3))).edges == \
        ((0, 1), (0, 3), (2, 3))
    # C4
    assert permutation_to_graph(PermutationDiagram((3, 4, 1, 2))).edges == \
        ((0, 2), (0, 3), (1, 2), (1, 3))
    # identity: no crossings
    assert permutation_to_graph(PermutationDiagram((1, 2, 3))).m == 0
    # reversal: complete graph
    assert permutation_to_graph(PermutationDiagram((3, 2, 1))).m == 3


def test_subdiagram_consistency():
    rng = random.Random(1)
    for _ in range(30):
        d = random_permutation(rng.randint(3, 10), rng)
        g = permutation_to_graph(d)
        vs = sorted(rng.sample(range(d.n), rng.randint(1, d.n)))
        sub_d, back = subdiagram(d, vs)
        sub_g = permutation_to_graph(sub_d)
        from convexia.graph import induced_subgraph
        ref, back2 = induced_subgraph(g, vs)
        assert back == back2
        assert sub_g.edges == ref.edges


def test_scanlines_realize_all_minimal_separators():
    rng = random.Random(2)
    import networkx as nx
    checked = 0
    while checked < 25:
        d = random_permutation(rng.randint(4, 9), rng)
        g = permutation_to_graph(d)
        if not is_connected(g):
            continue
        checked += 1
        crossing_sets = {frozenset(cs)
                         for _, cs in scanline_separator_set(d)}
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        for x in range(g.n):
            for y in range(x + 1, g.n):
                if g.has_edge(x, y):
                    continue
                for sep in nx.algorithms.minimal_separators(h, x, y) \
                        if hasattr(nx.algorithms, "minimal_separators") \
                        else _brute_min_separators(g, x, y):
                    assert frozenset(sep) in crossing_sets


def _brute_min_separators(g, x, y):
    out = []
    rest = [v for v in range(g.n) if v not in (x, y)]
    for r in range(len(rest) + 1):
        for sep in itertools.combinations(rest, r):
            if _separates(g, x, y, set(sep)) and \
                    not any(_separates(g, x, y, set(sep) - {v})
                            for v in sep):
                out.append(sep)
    return out


def _separates(g, x, y, sep):
    seen = {x}
    stack = [x]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in sep and w not in seen:
                seen.add(w)
                stack.append(w)
    return y not in seen


def test_crossing_set_example():
    d = PermutationDiagram((2, 4, 1, 3))
    # middle scanline: label 1 runs top slot 0 -> bottom slot 2, label 4
    # runs top slot 3 -> bottom slot 1; both cross it
    assert Scanline(2, 2).crossing_set(d) == (0, 3)
    assert Scanline(0, 0).crossing_set(d) == ()


def test_join_formula_cases():
    assert join_monophonic_number(JoinFactor(3, True),
                                  JoinFactor(2, True)) == 5
    assert join_monophonic_number(JoinFactor(3, True),
                                  JoinFactor(4, False, m=2)) == 2
    assert join_monophonic_number(JoinFactor(4, False, m=6),
                                  JoinFactor(5, False, m=7)) == 4
    assert join_monophonic_number(JoinFactor(4, False, m=2),
                                  JoinFactor(5, False, m=7)) == 2
    with pytest.raises(DomainError):
        JoinFactor(3, False)


def test_monophonic_membership_on_p5_and_with_chord():
    from convexia.graph import Graph
    p5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert monophonic_membership(p5, 0, 4, 2)
    # adding the chord 1-3 shortcuts every x,y-path around 2
    chorded = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
    assert 2 in __import__("convexia").between_set(chorded, 0, 4)
    assert not monophonic_membership(chorded, 0, 4, 2)
    with pytest.raises(DomainError):
        monophonic_membership(p5, 0, 4, 0)


def test_membership_criterion_is_necessary():
    # a False criterion certifies non-membership; a True criterion is only
    # a candidate (the pair need not extend to chordless segments)
    from convexia import between_set, monophonic_closure
    rng = random.Random(3)
    checked = 0
    while checked < 30:
        d = random_permutation(rng.randint(4, 9), rng)
        g = permutation_to_graph(d)
        if not is_connected(g):
            continue
        checked += 1
        for x in range(g.n):
            for y in range(x + 1, g.n):
                if g.has_edge(x, y):
                    continue
                j = set(monophonic_closure(g, [x, y]))
                for z in between_set(g, x, y):
                    if z in j:
                        assert monophonic_membership(g, x, y, z)


def test_successional_pairs_examples():
    # P5: 1-3-5-2-4 bottom order gives the path graph
    d = PermutationDiagram((2, 4, 1, 3, 5))
    pairs = successional_pairs(d)
    for s1, s2, comps in pairs:
        assert s1 != s2
        for comp in comps:
            assert comp  # nonempty between components
    # complete graph: no separators at all
    assert successional_pairs(PermutationDiagram((3, 2, 1))) == []


def test_monophonic_number_examples():
    assert permutation_monophonic_number(
        PermutationDiagram((3, 2, 1))).value == 3  # complete
    assert permutation_monophonic_number(
        PermutationDiagram((2, 4, 1, 3))).value == 2  # P4
    assert permutation_monophonic_number(
        PermutationDiagram((3, 4, 1, 2))).value == 2  # C4
    with pytest.raises(DomainError):
        permutation_monophonic_number(PermutationDiagram((1, 2)))


def test_monophonic_number_matches_oracle():
    rng = random.Random(4)
    checked = 0
    while checked < 60:
        d = random_permutation(rng.randint(2, 9), rng)
        g = permutation_to_graph(d)
        if not is_connected(g):
            continue
        checked += 1
        wn = permutation_monophonic_number(d)
        ref = min_convexity_number(g, "monophonic")
        assert wn.value == ref.value, d.pi
        assert is_convexity_set(g, wn.witness, "monophonic")
