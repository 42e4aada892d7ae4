"""Atom-bond sum connectivity index: computation, extremal families,
isomorph-free enumeration, and exhaustive verification of extremal
claims on small orders.
"""

from .absindex import (abs_from_degree_pairs, abs_index, degree_pairs,
                       edge_weight, weight_of_sum)
from .canon import (CanonicalForm, canonical_form, canonical_graph,
                    canonical_graph6, canonical_labeling, is_isomorphic)
from .enumeration import (MAX_ENUM_VERTICES, EnumSpec, connected_graphs,
                          count_graphs, enumerate_graphs)
from .families import (SixPart, abs_complete_closed, abs_kappa_xy_closed,
                       abs_knp_closed, abs_kr_join_closed,
                       abs_multipartite_closed, abs_path_closed,
                       abs_sixpart_closed, abs_turan_closed, build_complete,
                       build_complete_bipartite, build_complete_multipartite,
                       build_kappa_xy, build_knp, build_kr_join_multipartite,
                       build_path, build_sixpart, build_turan, sixpart_shape,
                       turan_parts)
from .graph import (Graph, add_edge, complement, delete_vertex, disjoint_union,
                    empty_graph, from_edge_list_text, from_edges, from_graph6,
                    induced_subgraph, join, parse_graph, relabel,
                    to_edge_list_text, to_graph6)
from .invariants import (BipartiteConnectivity, ClassConstraint, CutVertices,
                         KPartiteness, bipartition, block_decomposition,
                         cut_vertex_count, cut_vertices, is_bipartite,
                         is_connected, satisfies, vertex_connectivity,
                         vertex_k_partiteness)
from .lemmas import (LemmaCheck, bipartite_extremal_graph,
                     bipartite_extremal_params, bipartite_extremal_value,
                     check_balanced_step, check_balanced_step_even,
                     check_balanced_step_odd, check_chain_unimodal,
                     check_final_formulas, check_head_merge, check_kappa_shift,
                     check_kr_join_shift, check_multipartite_shift,
                     check_sixpart_merge, check_tail_merge,
                     check_zeta1_monotone, check_zeta_monotone, lemma_ids,
                     run_all_lemma_checks, run_lemma_check, step_value, zeta,
                     zeta1)
from .verifier import (ExtremalReport, expected_extremal, reports_to_json,
                       verify_extremal)

__version__ = "0.1.0"

__all__ = [
    "Graph", "empty_graph", "from_edges", "add_edge", "complement",
    "disjoint_union", "join", "relabel", "induced_subgraph", "delete_vertex",
    "from_graph6", "to_graph6", "from_edge_list_text", "to_edge_list_text",
    "parse_graph",
    "weight_of_sum", "edge_weight", "abs_index", "degree_pairs",
    "abs_from_degree_pairs",
    "CanonicalForm", "canonical_form", "canonical_labeling", "canonical_graph",
    "canonical_graph6", "is_isomorphic",
    "is_connected", "cut_vertices", "cut_vertex_count", "block_decomposition",
    "vertex_connectivity", "bipartition", "is_bipartite", "vertex_k_partiteness",
    "CutVertices", "KPartiteness", "BipartiteConnectivity", "ClassConstraint",
    "satisfies",
    "build_path", "abs_path_closed", "build_complete", "abs_complete_closed",
    "build_complete_bipartite", "build_complete_multipartite",
    "abs_multipartite_closed", "turan_parts", "build_turan", "abs_turan_closed",
    "build_kr_join_multipartite", "abs_kr_join_closed", "build_knp",
    "abs_knp_closed", "SixPart", "sixpart_shape", "build_sixpart",
    "abs_sixpart_closed", "build_kappa_xy", "abs_kappa_xy_closed",
    "MAX_ENUM_VERTICES", "EnumSpec", "enumerate_graphs", "count_graphs",
    "connected_graphs",
    "LemmaCheck", "zeta", "zeta1", "check_zeta_monotone", "check_zeta1_monotone",
    "check_multipartite_shift", "check_kr_join_shift", "check_sixpart_merge",
    "check_tail_merge", "check_head_merge", "check_kappa_shift",
    "step_value",
    "check_balanced_step", "check_balanced_step_even", "check_balanced_step_odd",
    "check_chain_unimodal", "check_final_formulas", "bipartite_extremal_params",
    "bipartite_extremal_value", "bipartite_extremal_graph", "lemma_ids",
    "run_lemma_check", "run_all_lemma_checks",
    "ExtremalReport", "expected_extremal", "verify_extremal", "reports_to_json",
]
