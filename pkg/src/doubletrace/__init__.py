"""Enumeration of double traces of simple connected graphs.

A double trace is a closed walk that traverses every edge of the graph
exactly twice.  The package enumerates one canonical representative per
equivalence class under graph automorphisms combined with rotation and
reversal of the walk, with optional restrictions on repetitions (strong,
d-stable) and on edge traversal directions (parallel, antiparallel).
"""

from .automorphism import (
    AutGroup,
    SymmetryElement,
    apply_symmetry,
    automorphisms,
    compose,
    identity_permutation,
    inverse_symmetry,
    invert,
    is_automorphism,
    symmetry_elements,
    symmetry_group_order,
)
from .enumerator import (
    PartialTrace,
    RetainedSymmetries,
    admits_antiparallel_strong,
    admits_d_stable,
    admits_parallel_strong,
    canonical_extension,
    enumerate_traces,
    feasible_neighbors,
    prune,
)
from .graph import (
    DisconnectedGraphError,
    Graph,
    NAMED_GRAPH_NAMES,
    named_graph,
    normalize_base_edge,
    parse_edge_list,
    parse_graph6,
)
from .oracle import (
    OracleSizeError,
    Orbit,
    OrbitReport,
    VerificationReport,
    brute_enumerate,
    canonical_orbit_representatives,
    emit_orbit_graph,
    orbit_partition,
    subgroup_elements,
    verify_against_oracle,
)
from .traces import (
    EnumerationConfig,
    format_trace,
    i_initial,
    init_segment,
    is_canonical,
    is_d_stable,
    is_double_trace,
    is_strong,
    lex_compare,
    orientation_class,
    parse_trace,
    repetitions,
    satisfies_kind,
    satisfies_orientation,
    transition_components,
)

__version__ = "0.1.0"

__all__ = [
    "AutGroup",
    "DisconnectedGraphError",
    "EnumerationConfig",
    "Graph",
    "NAMED_GRAPH_NAMES",
    "OracleSizeError",
    "Orbit",
    "OrbitReport",
    "PartialTrace",
    "RetainedSymmetries",
    "SymmetryElement",
    "VerificationReport",
    "admits_antiparallel_strong",
    "admits_d_stable",
    "admits_parallel_strong",
    "apply_symmetry",
    "automorphisms",
    "brute_enumerate",
    "canonical_extension",
    "canonical_orbit_representatives",
    "compose",
    "emit_orbit_graph",
    "enumerate_traces",
    "feasible_neighbors",
    "format_trace",
    "i_initial",
    "identity_permutation",
    "init_segment",
    "inverse_symmetry",
    "invert",
    "is_automorphism",
    "is_canonical",
    "is_d_stable",
    "is_double_trace",
    "is_strong",
    "lex_compare",
    "named_graph",
    "normalize_base_edge",
    "orbit_partition",
    "orientation_class",
    "parse_edge_list",
    "parse_graph6",
    "parse_trace",
    "prune",
    "repetitions",
    "satisfies_kind",
    "satisfies_orientation",
    "subgroup_elements",
    "symmetry_elements",
    "symmetry_group_order",
    "transition_components",
    "verify_against_oracle",
    "__version__",
]
