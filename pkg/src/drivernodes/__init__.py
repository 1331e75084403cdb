"""Minimal driver nodes for structural controllability of system digraphs."""

from .dilation import DilationSet, alternating_reachable, dilation_sets
from .drivers import (
    DriverReport,
    InfeasibleError,
    PairingResult,
    Verification,
    input_matrix_structure,
    min_driver_count,
    pair_decomposition,
    select_driver_nodes,
    verify_structural_controllability,
)
from .graph import (
    BipartiteGraph,
    Digraph,
    GraphParseError,
    bipartite_of,
    format_graph,
    generate_random,
    parse_graph,
    transpose,
)
from .matching import Matching, maximum_matching, s_rank, s_rank_with_drivers, unmatched_nodes
from .oracle import brute_force_min_drivers, numeric_controllability_check
from .scc import DfsAttributes, SccDecomposition, child_sccs, dfs_forest, scc_decompose

__version__ = "0.1.0"
