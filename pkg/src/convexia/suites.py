"""Named verification suites driven by the CLI `verify` subcommand.

Each suite returns {"suite", "cases", "failures": [...]}; a failure entry
carries enough context to reproduce the case.  All suites are deterministic
under their seed.
"""

from __future__ import annotations

import heapq
import itertools
import random

from .atfree import extremal_pair, between_set, is_at_free, \
    verify_steiner_implies_geodetic
from .decomposition import p4_sparse_number, tree_cograph_number
from .generators import (random_graph, random_p4_sparse, random_permutation,
                         random_tree, random_tree_cograph,
                         random_unit_interval_graph)
from .graph import (Graph, components, induced_subgraph, is_connected,
                    serialize_graph)
from .oracle import (is_convexity_set, min_convexity_number,
                     monophonic_closure)
from .permutation import (JoinFactor, join_monophonic_number,
                          permutation_monophonic_number,
                          permutation_to_graph, scanline_separator_set,
                          successional_pairs)
from .trees import tree_2geodetic_number, tree_geodetic_number


def _graph_id(g: Graph) -> str:
    return serialize_graph(g, "graph6")


def _all_labeled_trees(n: int):
    """All labeled trees on n vertices via Prufer sequences."""
    if n == 1:
        yield Graph(1, [])
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        degree = [1] * n
        for v in seq:
            degree[v] += 1
        edges = []
        heap = [v for v in range(n) if degree[v] == 1]
        heapq.heapify(heap)
        for v in seq:
            leaf = heapq.heappop(heap)
            edges.append((leaf, v))
            degree[v] -= 1
            if degree[v] == 1:
                heapq.heappush(heap, v)
        edges.append((heapq.heappop(heap), heapq.heappop(heap)))
        yield Graph(n, edges)


def suite_dp_vs_oracle(seed: int = 0, cases: int = 200) -> dict:
    """Tree formulas (g via leaves, g2 via the DP) against the oracle."""
    failures = []
    count = 0
    trees = []
    for n in range(1, 7):
        trees.extend(_all_labeled_trees(n))
    rng = random.Random(seed)
    trees.extend(random_tree(rng.randint(7, 10), rng) for _ in range(cases))
    for t in trees:
        count += 1
        for fn, kind in ((tree_geodetic_number, "geodetic"),
                         (tree_2geodetic_number, "2-geodetic")):
            wn = fn(t)
            ref = min_convexity_number(t, kind)
            if wn.value != ref.value or \
                    not is_convexity_set(t, wn.witness, kind):
                failures.append({"graph": _graph_id(t), "kind": kind,
                                 "got": wn.value, "oracle": ref.value})
    return {"suite": "dp-vs-oracle", "cases": count, "failures": failures}


def suite_class_vs_oracle(seed: int = 0, cases: int = 500) -> dict:
    """Tree-cograph and P4-sparse formulas against the oracle."""
    rng = random.Random(seed)
    failures = []
    count = 0
    for trial in range(cases):
        n = rng.randint(2, 12)
        for builder, solver, cls in (
                (random_tree_cograph, tree_cograph_number, "tree-cograph"),
                (random_p4_sparse, p4_sparse_number, "p4-sparse")):
            g = builder(n, rng)
            count += 1
            for kind in ("geodetic", "2-geodetic"):
                wn = solver(g, kind)
                ref = min_convexity_number(g, kind)
                if wn.value != ref.value:
                    failures.append({"graph": _graph_id(g), "class": cls,
                                     "kind": kind, "got": wn.value,
                                     "oracle": ref.value})
    return {"suite": "class-vs-oracle", "cases": count, "failures": failures}


def suite_steiner_geodetic(seed: int = 0, cases: int = 200) -> dict:
    """Every minimum Steiner set of an AT-free graph is geodetic."""
    rng = random.Random(seed)
    failures = []
    count = 0
    while count < cases:
        if count % 2 == 0:
            d = random_permutation(rng.randint(4, 10), rng)
            g = permutation_to_graph(d)
        else:
            g = random_unit_interval_graph(rng.randint(4, 10), rng)
        if not is_connected(g):
            continue
        count += 1
        report = verify_steiner_implies_geodetic(g)
        if report["violations"] or report["g"] > report["s"]:
            failures.append(report)
    return {"suite": "steiner-geodetic", "cases": count, "failures": failures}


def _induced_paths(g: Graph, x: int, y: int):
    """All chordless x,y-paths, as vertex tuples."""
    closed = [g.adj[v] | {v} for v in range(g.n)]
    stack = [(x, (x,), set())]
    while stack:
        last, path, banned = stack.pop()
        for w in sorted(g.adj[last]):
            if w in banned or w in path:
                continue
            if w == y:
                yield path + (y,)
                continue
            stack.append((w, path + (w,), banned | closed[last]))


def suite_betweenness(seed: int = 0, cases: int = 150) -> dict:
    """Betweenness separation, the extremal-pair join and dominating-pair
    properties, and the J(x,y) containment, on AT-free corpora."""
    rng = random.Random(seed)
    failures = []
    count = 0
    while count < cases:
        if count % 2 == 0:
            g = permutation_to_graph(random_permutation(rng.randint(4, 9), rng))
        else:
            g = random_unit_interval_graph(rng.randint(4, 9), rng)
        if not is_connected(g) or not is_at_free(g):
            continue
        count += 1
        gid = _graph_id(g)
        for x in range(g.n):
            for y in range(x + 1, g.n):
                if g.has_edge(x, y):
                    continue
                for z in between_set(g, x, y):
                    removed = g.adj[z] | {z}
                    seen = {x}
                    stack = [x]
                    while stack:
                        u = stack.pop()
                        for w in g.adj[u]:
                            if w not in removed and w not in seen:
                                seen.add(w)
                                stack.append(w)
                    if y in seen:
                        failures.append({"graph": gid, "check": "separation",
                                         "x": x, "y": y, "z": z})
        if g.m == g.n * (g.n - 1) // 2:
            continue
        ep = extremal_pair(g)
        if any(not g.has_edge(a, d) for a in ep.a_x for d in ep.delta_x) or \
                any(not g.has_edge(a, d) for a in ep.a_y for d in ep.delta_y):
            failures.append({"graph": gid, "check": "join-property",
                             "x": ep.x, "y": ep.y})
        full = set(range(g.n))
        for path in _induced_paths(g, ep.x, ep.y):
            covered = set(path)
            for v in path:
                covered |= g.adj[v]
            if covered != full:
                failures.append({"graph": gid, "check": "dominating-pair",
                                 "path": list(path)})
                break
        allowed = {ep.x, ep.y} | set(ep.delta_x) | set(ep.delta_y) | \
            set(ep.between)
        j = set(monophonic_closure(g, [ep.x, ep.y]))
        if not j <= allowed:
            failures.append({"graph": gid, "check": "J-containment",
                             "extra": sorted(j - allowed)})
    return {"suite": "betweenness", "cases": count, "failures": failures}


def suite_perm_dp(seed: int = 0, cases: int = 500) -> dict:
    """The permutation monophonic DP against the oracle."""
    rng = random.Random(seed)
    failures = []
    count = 0
    while count < cases:
        d = random_permutation(rng.randint(2, 11), rng)
        g = permutation_to_graph(d)
        if not is_connected(g):
            continue
        count += 1
        wn = permutation_monophonic_number(d)
        ref = min_convexity_number(g, "monophonic")
        if wn.value != ref.value or \
                not is_convexity_set(g, wn.witness, "monophonic"):
            failures.append({"perm": list(d.pi), "got": wn.value,
                             "oracle": ref.value})
    return {"suite": "perm-dp", "cases": count, "failures": failures}


def _component_cover_number(g: Graph, comp) -> tuple[int, list]:
    """Brute-force xi(C) and all minimum covers of the component."""
    cset = set(comp)
    for size in range(1, g.n + 1):
        covers = []
        for combo in itertools.combinations(range(g.n), size):
            if cset <= set(monophonic_closure(g, combo)):
                covers.append(combo)
        if covers:
            return size, covers
    return g.n, []  # pragma: no cover


def suite_cover_bound(seed: int = 0, cases: int = 60) -> dict:
    """Neighborhood nesting, the <=4-per-separator cover bound, and the
    join formula against the oracle."""
    rng = random.Random(seed)
    failures = []
    count = 0
    # neighborhood nesting + cover bound on random diagrams
    done = 0
    while done < cases:
        d = random_permutation(rng.randint(4, 10), rng)
        g = permutation_to_graph(d)
        if not is_connected(g):
            continue
        done += 1
        count += 1
        gid = _graph_id(g)
        for _, cs in scanline_separator_set(d):
            if not cs:
                continue
            sub_vs = [v for v in range(g.n) if v not in set(cs)]
            sub, back = induced_subgraph(g, sub_vs)
            for comp in components(sub):
                cc = {back[v] for v in comp}
                for u, v in itertools.combinations(cs, 2):
                    if g.has_edge(u, v):
                        continue
                    nu = g.adj[u] & cc
                    nv = g.adj[v] & cc
                    if not (nu <= nv or nv <= nu):
                        failures.append({"graph": gid, "check": "nesting",
                                         "separator": list(cs),
                                         "pair": [u, v]})
        for s1, s2, comps in successional_pairs(d):
            for comp in comps:
                xi, covers = _component_cover_number(g, comp)
                ok = any(len(set(c) & set(s1)) <= 4
                         and len(set(c) & set(s2)) <= 4 for c in covers)
                if not ok:
                    failures.append({"graph": gid, "check": "cover-bound",
                                     "component": list(comp), "xi": xi})
    # the join formula against the oracle
    for trial in range(cases):
        count += 1
        n1 = rng.randint(1, 5)
        n2 = rng.randint(1, 5)
        g1 = random_graph(n1, rng.random(), rng)
        g2 = random_graph(n2, rng.random(), rng)
        edges = list(g1.edges) + [(u + n1, v + n1) for u, v in g2.edges] + \
            [(u, v + n1) for u in range(n1) for v in range(n2)]
        h = Graph(n1 + n2, edges)
        factors = []
        for gg in (g1, g2):
            if gg.m == gg.n * (gg.n - 1) // 2:
                factors.append(JoinFactor(gg.n, True))
            else:
                factors.append(JoinFactor(
                    gg.n, False, min_convexity_number(gg, "monophonic").value))
        predicted = join_monophonic_number(*factors)
        actual = min_convexity_number(h, "monophonic").value
        if predicted != actual:
            failures.append({"graph": _graph_id(h), "check": "join-formula",
                             "got": predicted, "oracle": actual})
    return {"suite": "cover-bound", "cases": count, "failures": failures}


SUITES = {
    "dp-vs-oracle": suite_dp_vs_oracle,
    "class-vs-oracle": suite_class_vs_oracle,
    "steiner-geodetic": suite_steiner_geodetic,
    "betweenness": suite_betweenness,
    "perm-dp": suite_perm_dp,
    "cover-bound": suite_cover_bound,
}
