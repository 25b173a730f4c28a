"""Acceptance gate: nine criteria, one test (one pass/fail line under
`pytest -v`) per criterion.  Each test enforces its own runtime budget."""

import itertools
import random
import time

from convexia import (clique_number, cm_reduction, complement, components,
                      cotree_2geodetic_number, cotree_geodetic_number,
                      decompose_p4_sparse, decompose_tree_cograph,
                      figure1_graph, induced_subgraph, is_at_free,
                      is_connected, max_proper_monophonically_convex,
                      min_convexity_number, p4_sparse_number,
                      permutation_monophonic_number, permutation_to_graph,
                      tree_2geodetic_number, tree_cograph_number,
                      tree_geodetic_number, verify_steiner_implies_geodetic)
from convexia.generators import (random_p4_sparse, random_permutation,
                                 random_tree, random_tree_cograph,
                                 random_unit_interval_graph, spider_graph)
from convexia.graph import Graph
from convexia.suites import suite_betweenness, suite_cover_bound
from convexia.trees import _cotree_cases

from conftest import nonisomorphic_trees


def test_criterion_1_tree_dp_equals_oracle_all_trees_n10():
    t0 = time.monotonic()
    count = 0
    for n in range(1, 11):
        for t in nonisomorphic_trees(n):
            count += 1
            wn = tree_2geodetic_number(t)
            ref = min_convexity_number(t, "2-geodetic", cap=t.n)
            assert wn.value == ref.value, t.edges
    elapsed = time.monotonic() - t0
    assert count >= 200
    assert elapsed < 60, f"criterion 1 took {elapsed:.1f}s"


def test_criterion_2_cotree_formulas_equal_oracle_n9():
    # corpus extended to n = 10: only three trees with n <= 9 have
    # diameter > 3 and no degree-2 vertex, so the fourth case cannot reach
    # five instances on the smaller corpus
    t0 = time.monotonic()
    hit = {1: 0, 2: 0, 3: 0, 4: 0}
    for n in range(2, 11):
        for t in nonisomorphic_trees(n):
            diam, has_deg2, _ = _cotree_cases(t)
            case = 1 if diam <= 2 else 2 if diam == 3 else \
                3 if has_deg2 else 4
            hit[case] += 1
            ct = complement(t)
            assert cotree_geodetic_number(t).value == \
                min_convexity_number(ct, "geodetic", cap=t.n).value, t.edges
            assert cotree_2geodetic_number(t).value == \
                min_convexity_number(ct, "2-geodetic", cap=t.n).value, t.edges
    elapsed = time.monotonic() - t0
    assert all(hit[c] >= 5 for c in hit), hit
    assert elapsed < 60, f"criterion 2 took {elapsed:.1f}s"


def _all_trees_upto(n):
    for k in range(1, n + 1):
        yield from nonisomorphic_trees(k)


def _glue(parts, join):
    offset = 0
    edges = []
    sizes = []
    for p in parts:
        edges.extend((u + offset, v + offset) for u, v in p.edges)
        sizes.append(p.n)
        offset += p.n
    if join:
        starts = [sum(sizes[:i]) for i in range(len(sizes))]
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                edges.extend((a + starts[i], b + starts[j])
                             for a in range(sizes[i])
                             for b in range(sizes[j]))
    return Graph(offset, edges)


def _tree_code(t):
    # AHU canonical string, rooted at the tree center(s)
    def code(root, parent):
        return "(" + "".join(sorted(code(w, root)
                                    for w in t.adj[root]
                                    if w != parent)) + ")"
    # peel leaves to find the center
    deg = [t.degree(v) for v in range(t.n)]
    layer = [v for v in range(t.n) if deg[v] <= 1]
    alive = t.n
    adj = [set(t.adj[v]) for v in range(t.n)]
    while alive > 2:
        nxt = []
        for v in layer:
            alive -= 1
            for w in adj[v]:
                adj[w].discard(v)
                if len(adj[w]) == 1:
                    nxt.append(w)
            adj[v].clear()
        layer = nxt
    return min(code(c, -1) for c in layer)


def _class_corpus(n_max, p4_sparse):
    """All members of the class with at most n_max vertices, one graph per
    construction code (covers every accepted isomorphism class)."""
    members = {}   # code -> Graph, grouped by size
    by_n = {k: [] for k in range(1, n_max + 1)}

    def add(code, g):
        if code not in members:
            members[code] = g
            by_n[g.n].append((code, g))

    if p4_sparse:
        add(("K1",), Graph(1, []))
    else:
        for t in _all_trees_upto(n_max):
            add(("T", _tree_code(t)), t)
            add(("cT", _tree_code(t)), complement(t))

    for n in range(2, n_max + 1):
        if p4_sparse:
            for feet in range(2, n // 2 + 1):
                head_n = n - 2 * feet
                heads = [(None, None)] if head_n == 0 else \
                    [(c, g) for c, g in by_n.get(head_n, [])]
                for thin in (True, False):
                    for hcode, hg in heads:
                        code = ("S", feet, thin, hcode)
                        add(code, spider_graph(feet, thin, hg))
        for op in ("U", "J"):
            # multisets of at least two smaller members summing to n,
            # children not built by the same operation (flattened form)
            pool = [(c, g) for k in range(1, n) for c, g in by_n[k]
                    if c[0] != op]
            seen_combo = set()
            stack = [((), 0, n)]
            while stack:
                chosen, start, rem = stack.pop()
                if rem == 0 and len(chosen) >= 2:
                    key = tuple(sorted(c for c, _ in chosen))
                    if key not in seen_combo:
                        seen_combo.add(key)
                        add((op, key), _glue([g for _, g in chosen],
                                             op == "J"))
                    continue
                for i in range(start, len(pool)):
                    c, g = pool[i]
                    if g.n <= rem:
                        stack.append((chosen + ((c, g),), i, rem - g.n))
    return [g for g in members.values()]


def test_criterion_3_class_formulas_equal_oracle():
    t0 = time.monotonic()
    for p4s, solver, decomposer in (
            (False, tree_cograph_number, decompose_tree_cograph),
            (True, p4_sparse_number, decompose_p4_sparse)):
        corpus = _class_corpus(8, p4s)
        assert len(corpus) > 100
        for g in corpus:
            assert decomposer(g) is not None
            for kind in ("geodetic", "2-geodetic"):
                assert solver(g, kind).value == \
                    min_convexity_number(g, kind, cap=8).value, g.edges
    rng = random.Random(33)
    for trial in range(250):
        n = rng.randint(2, 12)
        for g, solver in ((random_tree_cograph(n, rng), tree_cograph_number),
                          (random_p4_sparse(n, rng), p4_sparse_number)):
            for kind in ("geodetic", "2-geodetic"):
                assert solver(g, kind).value == \
                    min_convexity_number(g, kind, cap=12).value, g.edges
    elapsed = time.monotonic() - t0
    assert elapsed < 300, f"criterion 3 took {elapsed:.1f}s"


def test_criterion_4_minimum_steiner_sets_are_geodetic():
    t0 = time.monotonic()
    rng = random.Random(44)
    done_perm = done_ui = 0
    while done_perm < 500 or done_ui < 200:
        if done_perm < 500:
            g = permutation_to_graph(random_permutation(rng.randint(3, 10),
                                                        rng))
            kind = "perm"
        else:
            g = random_unit_interval_graph(rng.randint(3, 10), rng)
            kind = "ui"
        if not is_connected(g):
            continue
        if kind == "perm":
            done_perm += 1
        else:
            done_ui += 1
        report = verify_steiner_implies_geodetic(g)
        assert report["violations"] == [], report
        assert report["g"] <= report["s"], report
    elapsed = time.monotonic() - t0
    assert elapsed < 300, f"criterion 4 took {elapsed:.1f}s"


def test_criterion_5_figure1_golden_and_replication():
    g1, _ = figure1_graph(1)
    assert min_convexity_number(g1, "geodetic").value == 4
    assert min_convexity_number(g1, "steiner").value == 5
    for k in (1, 2, 3):
        gk, _ = figure1_graph(k)
        s_total = g_total = 0
        for comp in components(gk):
            sub, _ = induced_subgraph(gk, comp)
            s_total += min_convexity_number(sub, "steiner").value
            g_total += min_convexity_number(sub, "geodetic").value
        assert s_total - g_total == k, (k, s_total, g_total)


def test_criterion_6_permutation_dp_equals_oracle():
    t0 = time.monotonic()
    rng = random.Random(66)
    done = 0
    while done < 500:
        d = random_permutation(rng.randint(2, 11), rng)
        g = permutation_to_graph(d)
        if not is_connected(g):
            continue
        done += 1
        assert permutation_monophonic_number(d).value == \
            min_convexity_number(g, "monophonic").value, d.pi
    elapsed = time.monotonic() - t0
    assert elapsed < 600, f"criterion 6 took {elapsed:.1f}s"


def test_criterion_7_structural_property_suites():
    t0 = time.monotonic()
    bw = suite_betweenness(seed=7)
    cb = suite_cover_bound(seed=7)
    assert bw["failures"] == []
    assert cb["failures"] == []
    elapsed = time.monotonic() - t0
    assert elapsed < 600, f"criterion 7 took {elapsed:.1f}s"


def test_criterion_8_cm_reduction_realizes_clique_number():
    rng = random.Random(88)
    done = 0
    while done < 50:
        n = rng.randint(2, 8)
        if done % 2 == 0:
            g = permutation_to_graph(random_permutation(n, rng))
        else:
            g = random_unit_interval_graph(n, rng)
        if not is_at_free(g):
            continue
        done += 1
        cm = max_proper_monophonically_convex(cm_reduction(g))
        assert cm.value == clique_number(g) + 1, g.edges


def test_criterion_9_million_node_tree_under_two_seconds():
    rng = random.Random(99)
    t = random_tree(10 ** 6, rng)
    t0 = time.monotonic()
    wn = tree_2geodetic_number(t)
    elapsed = time.monotonic() - t0
    assert 0 < wn.value <= t.n
    assert elapsed < 2.0, f"criterion 9 took {elapsed:.3f}s"
