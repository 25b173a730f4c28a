import itertools
import random

import pytest

from convexia import (DomainError, Graph, NodeKind, complement,
                      decompose_p4_sparse, decompose_tree_cograph,
                      is_convexity_set, min_convexity_number,
                      p4_sparse_number, tree_cograph_number)
from convexia.generators import (random_p4_sparse, random_tree,
                                 random_tree_cograph, spider_graph)

from conftest import atlas_graphs


def _is_p4_sparse_naive(g: Graph) -> bool:
    """Definition check: every 5 vertices induce at most one P4."""
    p4s_by_vset = {}
    for quad in itertools.combinations(range(g.n), 4):
        for perm in itertools.permutations(quad):
            if perm[0] > perm[3]:
                continue
            a, b, c, d = perm
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d) \
                    and not g.has_edge(a, c) and not g.has_edge(a, d) \
                    and not g.has_edge(b, d):
                p4s_by_vset.setdefault(frozenset(quad), set()).add(perm)
    for five in itertools.combinations(range(g.n), 5):
        count = 0
        fs = set(five)
        for vset, paths in p4s_by_vset.items():
            if vset <= fs:
                count += len(paths)
        if count > 1:
            return False
    return True


def test_p4_sparse_recognition_matches_definition():
    for g in atlas_graphs(6):
        got = decompose_p4_sparse(g) is not None
        assert got == _is_p4_sparse_naive(g), g.edges


def test_tree_cograph_recognition_examples(cycle_graph):
    assert decompose_tree_cograph(random_tree(9, random.Random(1))) is not None
    t = random_tree(7, random.Random(2))
    assert decompose_tree_cograph(complement(t)) is not None
    # C5 is neither a tree-cograph nor P4-sparse
    assert decompose_tree_cograph(cycle_graph(5)) is None
    assert decompose_p4_sparse(cycle_graph(5)) is None
    # C6 contains 2 P4s among some 5 vertices
    assert decompose_p4_sparse(cycle_graph(6)) is None


def test_decomposition_tree_shape():
    # disjoint union of a diamond (a join) and a path
    g = Graph(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
                  (4, 5), (5, 6), (6, 7)])
    tree = decompose_tree_cograph(g)
    assert tree is not None
    assert tree.kind is NodeKind.UNION
    kinds = {child.kind for child in tree.children}
    assert NodeKind.JOIN in kinds
    assert NodeKind.TREE_LEAF in kinds


def test_spider_detection_round_trip():
    for feet in (2, 3, 4):
        for thin in (True, False):
            for head_n in (0, 1, 3):
                head = random_tree(head_n, random.Random(0)) if head_n else None
                if head_n and not decompose_p4_sparse(head):
                    continue
                g = spider_graph(feet, thin, head)
                tree = decompose_p4_sparse(g)
                assert tree is not None, (feet, thin, head_n)
                if feet >= 3:  # thin/thick coincide below 3 feet
                    spiders = [t for t in _walk(tree)
                               if t.kind is NodeKind.SPIDER]
                    assert spiders, (feet, thin, head_n)


def _walk(node):
    yield node
    for child in node.children:
        yield from _walk(child)


def test_values_match_oracle_on_random_instances():
    rng = random.Random(4)
    for trial in range(60):
        n = rng.randint(2, 11)
        tc = random_tree_cograph(n, rng)
        ps = random_p4_sparse(n, rng)
        for g, solver in ((tc, tree_cograph_number), (ps, p4_sparse_number)):
            for kind in ("geodetic", "2-geodetic"):
                wn = solver(g, kind)
                ref = min_convexity_number(g, kind)
                assert wn.value == ref.value, (g.edges, kind)
                assert is_convexity_set(g, wn.witness, kind)


def test_kind_aliases_accepted():
    t = random_tree(6, random.Random(5))
    assert tree_cograph_number(t, "g").value == \
        tree_cograph_number(t, "geodetic").value
    assert tree_cograph_number(t, "g2").value == \
        tree_cograph_number(t, "2-geodetic").value


def test_rejects_graphs_outside_the_class(cycle_graph):
    with pytest.raises(DomainError):
        tree_cograph_number(cycle_graph(5), "geodetic")
    with pytest.raises(DomainError):
        p4_sparse_number(cycle_graph(5), "geodetic")


def test_thick_spider_two_feet_special_case():
    # with two feet the thick spider is a P4; g = 2, g2 = 3
    g = spider_graph(2, False)
    assert p4_sparse_number(g, "geodetic").value == \
        min_convexity_number(g, "geodetic").value == 2
    assert p4_sparse_number(g, "2-geodetic").value == \
        min_convexity_number(g, "2-geodetic").value == 3
