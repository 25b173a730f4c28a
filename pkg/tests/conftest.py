import itertools

import networkx as nx
import pytest

from convexia import Graph


def nx_to_graph(h) -> Graph:
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in h.edges()])


def atlas_graphs(max_n: int = 7, connected_only: bool = False):
    """All graphs with at most max_n vertices, from the graph atlas."""
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_n:
            break
        g = nx_to_graph(h)
        if connected_only and not nx.is_connected(h) and g.n > 0:
            continue
        yield g


def nonisomorphic_trees(n: int):
    if n == 1:
        yield Graph(1, [])
        return
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    for h in nx.nonisomorphic_trees(n):
        yield nx_to_graph(h)


@pytest.fixture
def path_graph():
    def make(n):
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    return make


@pytest.fixture
def cycle_graph():
    def make(n):
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    return make


@pytest.fixture
def complete_graph():
    def make(n):
        return Graph(n, list(itertools.combinations(range(n), 2)))
    return make
