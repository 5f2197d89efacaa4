"""Exact perfect-matching counting for path/cycle-by-tree Cartesian products.

The package has four layers:

- graphs:       paths, cycles, trees, Cartesian products, cycle enumeration
- orientation:  the doubled / layered / four-layer orientations and the
                nice-even-cycle Pfaffian check
- exactlinalg:  fraction-free determinants, tree characteristic polynomials,
                exact matrix polynomials and integer square roots
- counting:     brute-force oracle, Pfaffian counting, and the closed-form
                eigenvalue-product counts evaluated exactly

plus a command-line front end (pfmatch.cli / the `pfmatch` script).
"""

from .brute import (
    count_perfect_matchings,
    has_perfect_matching,
    matchings_by_size,
    max_matching_size,
)
from .counting import (
    DEFAULT_BRUTE_GUARD,
    CountResult,
    IdentityReport,
    SquarishDecomposition,
    count_brute,
    count_c4_path,
    count_c4_tree,
    count_grid_dimer,
    count_p3_tree,
    count_p4_tree,
    count_pfaffian,
    squarish_decompose,
    verify_identities,
)
from .errors import (
    EdgeListParseError,
    InvalidCycleError,
    InvalidSizeError,
    NotAPerfectSquareError,
    NotATreeError,
    NotPfaffianError,
    NotSquarishError,
    NumericalConsistencyError,
    OddCycleParityError,
    PfmatchError,
    PreconditionError,
    SizeLimitError,
)
from .exactlinalg import (
    IntMatrix,
    IntPolynomial,
    adjacency_matrix,
    char_poly_tree,
    det_bareiss,
    eval_matrix_poly,
    identity_matrix,
    integer_sqrt_exact,
    mat_mul,
    skew_char_poly,
)
from .graphs import (
    DEFAULT_CYCLE_GUARD,
    CycleSeq,
    Graph,
    Tree,
    cartesian_product,
    cycle_graph,
    enumerate_cycles,
    format_edge_list,
    is_cycle_of,
    parse_edge_list,
    path_graph,
    random_tree,
    validate_tree,
)
from .orientation import (
    Matching,
    OrientedGraph,
    PfaffianReport,
    check_pfaffian,
    converse,
    doubling_matching,
    format_oriented_edge_list,
    is_nice_cycle,
    is_oddly_oriented,
    orient_c4_tree,
    orient_double,
    orient_layered,
    orient_lexicographic,
    parse_oriented_edge_list,
    skew_adjacency,
)

__version__ = "0.1.0"

__all__ = [
    "CountResult",
    "CycleSeq",
    "DEFAULT_BRUTE_GUARD",
    "DEFAULT_CYCLE_GUARD",
    "EdgeListParseError",
    "Graph",
    "IdentityReport",
    "IntMatrix",
    "IntPolynomial",
    "InvalidCycleError",
    "InvalidSizeError",
    "Matching",
    "NotAPerfectSquareError",
    "NotATreeError",
    "NotPfaffianError",
    "NotSquarishError",
    "NumericalConsistencyError",
    "OddCycleParityError",
    "OrientedGraph",
    "PfaffianReport",
    "PfmatchError",
    "PreconditionError",
    "SizeLimitError",
    "SquarishDecomposition",
    "Tree",
    "adjacency_matrix",
    "cartesian_product",
    "char_poly_tree",
    "check_pfaffian",
    "converse",
    "count_brute",
    "count_c4_path",
    "count_c4_tree",
    "count_grid_dimer",
    "count_p3_tree",
    "count_p4_tree",
    "count_perfect_matchings",
    "count_pfaffian",
    "cycle_graph",
    "det_bareiss",
    "doubling_matching",
    "enumerate_cycles",
    "eval_matrix_poly",
    "format_edge_list",
    "format_oriented_edge_list",
    "has_perfect_matching",
    "identity_matrix",
    "integer_sqrt_exact",
    "is_cycle_of",
    "is_nice_cycle",
    "is_oddly_oriented",
    "mat_mul",
    "matchings_by_size",
    "max_matching_size",
    "orient_c4_tree",
    "orient_double",
    "orient_layered",
    "orient_lexicographic",
    "parse_edge_list",
    "parse_oriented_edge_list",
    "path_graph",
    "random_tree",
    "skew_adjacency",
    "skew_char_poly",
    "squarish_decompose",
    "validate_tree",
    "verify_identities",
]
