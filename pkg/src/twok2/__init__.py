"""Algorithms for 2K2-free graphs.

Recognition with certificates, minimal vertex separator enumeration,
constrained (connected, stable, clique) separators, maximal independent set
enumeration with vertex cover and 3-colorability consequences, and closed
feedback-vertex-set formulas for the triangle-free subclasses, each paired
with an independent brute-force oracle for verification at small sizes.
"""

from .errors import (DisconnectedGraphError, DomainError, FindingError,
                     NoSeparatorError, NotTwoK2FreeError, ParseError,
                     SubclassError, TwoK2Error)
from .feedback import (FvsResult, SubclassTag, classify_subclass, fvs_c3c4,
                       fvs_c3c5)
from .generators import (enumerate_chain_graphs, enumerate_connected_graphs,
                         gen_2k2_free_rejection, gen_chain_graph,
                         gen_split_graph)
from .graph import (ComponentSplit, Graph, VertexSet, classify_subset,
                    components_after_removal, graph_predicates,
                    is_universal_edge, is_universal_vertex, parse_dimacs,
                    parse_graph, serialize, vertex_set)
from .independent_sets import (ColorResult, MISCollection,
                               enumerate_minimal_vertex_covers, enumerate_mis,
                               max_independent_set, min_vertex_cover,
                               three_color)
from .oracles import (oracle_min_connected_separator, oracle_min_fvs,
                      oracle_minimal_separators, oracle_mis,
                      oracle_three_color)
from .recognition import (ForbiddenWitness, RecognitionResult, TwoK2Witness,
                          detect_small_cycles, find_2k2_pair,
                          find_forbidden_subgraph, min_degree_separator,
                          test_2k2_structural)
from .separators import (ConnectedSeparatorAnswer, SeparatorRecord,
                         classify_separator, enumerate_mvs,
                         min_clique_separator, min_connected_separator,
                         min_stable_separator)

__version__ = "0.1.0"

__all__ = [
    "ColorResult", "ComponentSplit", "ConnectedSeparatorAnswer",
    "DisconnectedGraphError", "DomainError", "FindingError",
    "ForbiddenWitness", "FvsResult", "Graph", "MISCollection",
    "NoSeparatorError", "NotTwoK2FreeError", "ParseError",
    "RecognitionResult", "SeparatorRecord", "SubclassError", "SubclassTag",
    "TwoK2Error", "TwoK2Witness", "VertexSet", "classify_separator",
    "classify_subclass", "classify_subset", "components_after_removal",
    "detect_small_cycles", "enumerate_chain_graphs",
    "enumerate_connected_graphs", "enumerate_minimal_vertex_covers",
    "enumerate_mis", "enumerate_mvs", "find_2k2_pair",
    "find_forbidden_subgraph", "fvs_c3c4", "fvs_c3c5",
    "gen_2k2_free_rejection", "gen_chain_graph", "gen_split_graph",
    "graph_predicates", "is_universal_edge", "is_universal_vertex",
    "max_independent_set", "min_clique_separator", "min_connected_separator",
    "min_degree_separator", "min_stable_separator", "min_vertex_cover",
    "oracle_min_connected_separator", "oracle_min_fvs",
    "oracle_minimal_separators", "oracle_mis", "oracle_three_color",
    "parse_dimacs", "parse_graph", "serialize", "test_2k2_structural",
    "three_color", "vertex_set",
]
