"""Edge maxima, extremal hosts, and cycle families in k-uniform hypergraphs.

The package computes exact maximum edge counts for hosts avoiding a
vertex-disjoint family of hypergraph cycles, builds matching extremal
hosts, detects and extracts such families, and cross-checks everything
with an exhaustive search on small parameters.
"""

from .constructions import (
    ConstructionSizeError,
    ConstructionSpec,
    InfeasibleConstructionError,
    build_construction,
    build_linear_extremal,
    build_meeting_family,
    build_minimal_extremal,
    build_path_extremal,
)
from .detect import (
    contains_disjoint_family,
    contains_pattern,
    family_present_with_edge,
    iter_pattern_witnesses,
)
from .extractor import (
    ExtractionError,
    ExtractionResult,
    ExtractionTrace,
    LevelTrace,
    extract_disjoint_linear,
    extract_disjoint_minimal,
)
from .formulas import (
    FormulaResult,
    UnsupportedParameters,
    compute_t,
    kmw_bound,
    linear_family_turan,
    linear_path_turan,
    minimal_family_turan,
    r_copies_turan,
    single_cycle_turan,
)
from .hypergraph import (
    EdgeListParseError,
    HypergraphError,
    KHypergraph,
    UniformityError,
    VertexRangeError,
    are_isomorphic,
    find_pair_sharing_exactly_one,
    new_hypergraph,
    parse_edge_list,
    remove_vertices,
    write_edge_list,
)
from .oracle import oracle_contains, oracle_contains_pattern
from .patterns import (
    FamilySpec,
    PatternKind,
    Witness,
    WitnessError,
    build_linear_cycle,
    build_linear_path,
    check_berge,
    check_linear_cycle,
    check_linear_path,
    check_minimal_cycle,
    find_berge_vertices,
    min_length,
    min_vertices,
    parse_kind,
    validate_witness,
)
from .search import (
    SearchBudget,
    SearchResult,
    max_edges_avoiding,
    random_hypergraph,
    saturation_fraction,
)

__version__ = "0.1.0"

__all__ = [
    "ConstructionSizeError",
    "ConstructionSpec",
    "EdgeListParseError",
    "ExtractionError",
    "ExtractionResult",
    "ExtractionTrace",
    "FamilySpec",
    "FormulaResult",
    "HypergraphError",
    "InfeasibleConstructionError",
    "KHypergraph",
    "LevelTrace",
    "PatternKind",
    "SearchBudget",
    "SearchResult",
    "UniformityError",
    "UnsupportedParameters",
    "VertexRangeError",
    "Witness",
    "WitnessError",
    "are_isomorphic",
    "build_construction",
    "build_linear_cycle",
    "build_linear_extremal",
    "build_linear_path",
    "build_meeting_family",
    "build_minimal_extremal",
    "build_path_extremal",
    "check_berge",
    "check_linear_cycle",
    "check_linear_path",
    "check_minimal_cycle",
    "compute_t",
    "contains_disjoint_family",
    "contains_pattern",
    "extract_disjoint_linear",
    "extract_disjoint_minimal",
    "family_present_with_edge",
    "find_berge_vertices",
    "find_pair_sharing_exactly_one",
    "iter_pattern_witnesses",
    "kmw_bound",
    "linear_family_turan",
    "linear_path_turan",
    "max_edges_avoiding",
    "min_length",
    "min_vertices",
    "minimal_family_turan",
    "new_hypergraph",
    "oracle_contains",
    "oracle_contains_pattern",
    "parse_edge_list",
    "parse_kind",
    "r_copies_turan",
    "random_hypergraph",
    "remove_vertices",
    "saturation_fraction",
    "single_cycle_turan",
    "validate_witness",
    "write_edge_list",
]
