"""Exact fourth-adjacency-coefficient toolkit for connected bipartite graphs.

Computes characteristic-polynomial coefficients and matching counts exactly,
recognizes and manipulates difference (chain) graphs, enumerates connected
bipartite (n, m)-graphs up to isomorphism, and audits reference closed-form
predictions for the minimal fourth coefficient against brute force.
"""

from .errors import ScaleError
from .graph import (
    MAX_VERTICES,
    SACHS_ORACLE_LIMIT,
    CoefficientVector,
    CycleCounts,
    EdgeListError,
    Graph,
    Membership,
    a4_components,
    a4_fast,
    charpoly_coefficients,
    count_matchings,
    count_short_cycles,
    distance,
    dump_graph,
    from_edges,
    from_graph6,
    iter_sachs_subgraphs,
    load_graph,
    matching_counts,
    quadrangles,
    sachs_coefficient,
    sachs_embedding_sum,
    to_graph6,
    validate_membership,
)
from .difference import (
    CharacteristicMatrixT,
    VertexEigenvector,
    YoungMatrix,
    a4_by_blocks,
    a4_by_char_matrix,
    a4_by_row_sums,
    characteristic_matrix,
    difference_complement,
    eigenvector_from_rows,
    eigenvector_of,
    format_eigenvector,
    format_rows,
    has_induced_p5,
    is_difference,
    iter_canonical_eigenvectors,
    parse_eigenvector,
    parse_rows,
    realize,
    young_matrix,
)
from .compression import (
    CornerSet,
    NeighborSplit,
    audit_corner_monotonicity,
    audit_vertex_compression,
    compress,
    corner_matching_count,
    corner_matching_count_direct,
    corner_sets,
    neighbor_split,
    young_compress,
)
from .partition import (
    SolveResult,
    conjugate,
    enumerate_feasible,
    feasible_edge_range,
    objective,
    solve,
)
from .search import (
    SearchReport,
    StructuralFlags,
    VerifyResult,
    arithmetic_inequality_check,
    closed_form_prediction,
    enumerate_bipartite,
    enumerate_eigenvectors,
    exhaustive_limit,
    min_a4_bruteforce,
    min_a4_difference,
    structural_predicates,
    verify_cell,
    verify_range,
)
from .corpus import compression_fuzz, random_connected_bipartite, random_graph

__version__ = "0.1.0"
