import random

import pytest

from convexia import (DomainError, complement, is_convexity_set, leaves,
                      min_convexity_number, tree_2geodetic_number,
                      tree_geodetic_number)
from convexia import cotree_2geodetic_number, cotree_geodetic_number
from convexia.generators import random_tree
from convexia.graph import Graph, diameter
from convexia.trees import _cotree_cases

from conftest import nonisomorphic_trees


def test_tree_geodetic_is_leaf_count():
    rng = random.Random(0)
    for _ in range(50):
        t = random_tree(rng.randint(1, 30), rng)
        wn = tree_geodetic_number(t)
        assert wn.value == len(leaves(t))
        assert wn.witness == leaves(t)
        if t.n > 1:
            assert is_convexity_set(t, wn.witness, "geodetic", cap=t.n)


def test_tree_numbers_match_oracle_small():
    for n in range(1, 9):
        for t in nonisomorphic_trees(n):
            g = tree_geodetic_number(t)
            g2 = tree_2geodetic_number(t)
            assert g.value == min_convexity_number(t, "geodetic").value
            assert g2.value == min_convexity_number(t, "2-geodetic").value
            assert is_convexity_set(t, g2.witness, "2-geodetic")
            assert g.value <= g2.value


def test_tree_2geodetic_known_values(path_graph):
    # path: every internal vertex needs both neighbors selected
    assert tree_2geodetic_number(path_graph(2)).value == 2
    assert tree_2geodetic_number(path_graph(5)).value == 3
    assert tree_2geodetic_number(path_graph(6)).value == 4
    star = Graph(6, [(0, i) for i in range(1, 6)])
    assert tree_2geodetic_number(star).value == 5


def test_tree_solvers_reject_non_trees(cycle_graph):
    with pytest.raises(DomainError):
        tree_2geodetic_number(cycle_graph(4))
    with pytest.raises(DomainError):
        tree_geodetic_number(Graph(4, [(0, 1), (2, 3)]))


def _case_of(t):
    diam, has_deg2, _ = _cotree_cases(t)
    if diam <= 2:
        return 1
    if diam == 3:
        return 2
    return 3 if has_deg2 else 4


def test_cotree_formulas_match_oracle():
    hit = {1: 0, 2: 0, 3: 0, 4: 0}
    for n in range(2, 9):
        for t in nonisomorphic_trees(n):
            hit[_case_of(t)] += 1
            for solver, kind in ((cotree_geodetic_number, "geodetic"),
                                 (cotree_2geodetic_number, "2-geodetic")):
                wn = solver(t)
                ref = min_convexity_number(complement(t), kind)
                assert wn.value == ref.value, (t.edges, kind)
                assert is_convexity_set(complement(t), wn.witness, kind)
    assert all(v > 0 for v in hit.values())


def test_cotree_case_values():
    # diam <= 2: complement of a star needs all n vertices
    star = Graph(5, [(0, i) for i in range(1, 5)])
    assert diameter(star) == 2
    assert cotree_geodetic_number(star).value == 5
    # diam == 3: P4 complement is P4 again, g = 2
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert cotree_geodetic_number(p4).value == 2
    assert cotree_2geodetic_number(p4).value == 3
    # diam > 3 with a degree-2 vertex: long path
    p7 = Graph(7, [(i, i + 1) for i in range(6)])
    assert cotree_geodetic_number(p7).value == 3
    # diam > 3 with no degree-2 vertex: spine with a leaf on each
    # internal vertex
    brush = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 4),
                      (1, 5), (2, 6), (3, 7)])
    assert diameter(brush) > 3
    assert all(brush.degree(v) != 2 for v in range(8))
    assert cotree_geodetic_number(brush).value == 4


def test_large_random_trees_witness_sizes():
    rng = random.Random(9)
    t = random_tree(5000, rng)
    wn = tree_2geodetic_number(t)
    assert sum(1 for _ in wn.witness) == wn.value
    assert set(leaves(t)) <= set(wn.witness)  # leaves are forced
