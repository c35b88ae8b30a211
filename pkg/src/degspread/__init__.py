"""Toolkit for the minimum number of close-degree vertex pairs in simple graphs.

Provides the closed-form bound f0(n, k) with its extremal layered construction,
exact close-pair counting on graphs and degree sequences, graphicality testing
and realization, an exhaustive pruned search over graphical degree sequences,
verification sweeps, and exact-arithmetic checkers for the supporting
inequalities.
"""

__version__ = "0.1.0"

from .degseq import (EnumerationConfig, SearchOutcome, enumerate_sequences,
                     is_graphical, minimize_hk, realize, try_realize)
from .extremal import ExtremalBlueprint, blueprint, construct_extremal, f0
from .formats import (Graph6Error, format_edge_list, graph6_decode,
                      graph6_encode, parse_edge_list, to_dot)
from .graphcore import (MAX_VERTICES, ClosePair, DegreeSequence, Graph,
                        InternalInvariantError, SpreadParams, close_pairs,
                        comb2, degree_sequence_of, find_close_clique,
                        h_k_graph, h_k_sequence)
from .lemmas import (ChainSplit, GroupProfile, LemmaPreconditionError,
                     LemmaVerdict, check_avg_degree_gap, check_chain_inequality,
                     check_convex_rearrangement, check_cross_close_bound,
                     check_group_pair_bound, check_theorem5_polynomial,
                     formula_table_checksum, profile_from_graph,
                     run_lemma_trials)
from .verifier import (BlockFamilySpec, FamilyGridTooLarge, VerificationEntry,
                       VerificationReport, check_lemma_l2_profile,
                       search_block_family, verify_range)

__all__ = [
    "__version__",
    "BlockFamilySpec", "ChainSplit", "ClosePair", "DegreeSequence",
    "EnumerationConfig", "ExtremalBlueprint", "FamilyGridTooLarge", "Graph",
    "Graph6Error", "GroupProfile", "InternalInvariantError",
    "LemmaPreconditionError", "LemmaVerdict", "MAX_VERTICES", "SearchOutcome",
    "SpreadParams", "VerificationEntry", "VerificationReport", "blueprint",
    "check_avg_degree_gap", "check_chain_inequality",
    "check_convex_rearrangement", "check_cross_close_bound",
    "check_group_pair_bound", "check_lemma_l2_profile",
    "check_theorem5_polynomial", "close_pairs", "comb2", "construct_extremal",
    "degree_sequence_of", "enumerate_sequences", "f0", "find_close_clique",
    "format_edge_list", "formula_table_checksum", "graph6_decode",
    "graph6_encode", "h_k_graph", "h_k_sequence", "is_graphical",
    "minimize_hk", "parse_edge_list", "profile_from_graph", "realize",
    "run_lemma_trials", "search_block_family", "to_dot", "try_realize",
    "verify_range",
]
