"""Convexity invariants of graphs.

Exact oracles for geodetic, 2-geodetic, monophonic, and Steiner numbers,
polynomial algorithms for trees, cotrees, tree-cographs, P4-sparse graphs,
and permutation graphs, and supporting AT-free structure machinery.
"""

from .atfree import (AsteroidalTriple, ExtremalPair, IntervalFamily,
                     between_set, caterpillar_realization,
                     chordal_monophonic_number, clique_number, cm_reduction,
                     component_toward, extremal_pair, figure1_family,
                     figure1_graph, find_asteroidal_triple, intervals_to_graph,
                     is_at_free, verify_steiner_implies_geodetic)
from .decomposition import (DecompositionTree, NodeKind, SpiderPartition,
                            decompose_p4_sparse, decompose_tree_cograph,
                            p4_sparse_number, tree_cograph_number)
from .errors import (BudgetError, ConvexiaError, DomainError, GraphParseError,
                     GraphRangeError)
from .generators import (random_graph, random_p4_sparse, random_permutation,
                         random_tree, random_tree_cograph,
                         random_unit_interval_family,
                         random_unit_interval_graph, spider_graph)
from .graph import (Graph, complement, components, diameter, distances,
                    induced_subgraph, is_chordal, is_connected, is_tree,
                    leaves, load_graph, serialize_graph, simplicial_vertices)
from .kernel import BACKEND
from .oracle import (DEFAULT_CAP, KINDS, WitnessedNumber, geodetic_interval,
                     is_convexity_set, max_proper_monophonically_convex,
                     min_convexity_number, monophonic_closure,
                     steiner_distance, steiner_interval)
from .permutation import (JoinFactor, PermutationDiagram, Scanline,
                          join_monophonic_number, monophonic_membership,
                          permutation_monophonic_number, permutation_to_graph,
                          scanline_separator_set, subdiagram,
                          successional_pairs)
from .suites import SUITES
from .trees import (cotree_2geodetic_number, cotree_geodetic_number,
                    tree_2geodetic_number, tree_geodetic_number)

__version__ = "1.0.0"

__all__ = [
    "AsteroidalTriple", "BACKEND", "BudgetError", "ConvexiaError",
    "DEFAULT_CAP", "DecompositionTree", "DomainError", "ExtremalPair",
    "Graph", "GraphParseError", "GraphRangeError", "IntervalFamily",
    "JoinFactor", "KINDS", "NodeKind", "PermutationDiagram", "SUITES",
    "Scanline", "SpiderPartition", "WitnessedNumber", "between_set",
    "caterpillar_realization", "chordal_monophonic_number", "clique_number",
    "cm_reduction", "complement", "component_toward", "components",
    "cotree_2geodetic_number", "cotree_geodetic_number",
    "decompose_p4_sparse", "decompose_tree_cograph", "diameter", "distances",
    "extremal_pair", "figure1_family", "figure1_graph",
    "find_asteroidal_triple", "geodetic_interval", "induced_subgraph",
    "intervals_to_graph", "is_at_free", "is_chordal", "is_connected",
    "is_convexity_set", "is_tree", "join_monophonic_number", "leaves",
    "load_graph", "max_proper_monophonically_convex", "min_convexity_number",
    "monophonic_closure", "monophonic_membership", "p4_sparse_number",
    "permutation_monophonic_number", "permutation_to_graph", "random_graph",
    "random_p4_sparse", "random_permutation", "random_tree",
    "random_tree_cograph", "random_unit_interval_family",
    "random_unit_interval_graph", "scanline_separator_set", "serialize_graph",
    "simplicial_vertices", "spider_graph", "steiner_distance",
    "steiner_interval", "subdiagram", "successional_pairs",
    "tree_2geodetic_number", "tree_cograph_number", "tree_geodetic_number",
    "verify_steiner_implies_geodetic", "__version__",
]
