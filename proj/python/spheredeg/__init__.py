"""Degree toolkit for genus-labeled sphere system graphs.

Everything lives in the compiled core: graph types with genus labels and
a basepoint, the degree function with its collapse and pillar operations,
type enumeration, exact reduced integral homology, degree filtrations,
and the degree-lowering surgery descent on disk maps.
"""

from ._core import (
    BadSimplex,
    DegreeFilteredComplex,
    DescentResult,
    DiskMap,
    Error,
    FaceNotInComplexError,
    FillError,
    FillOptions,
    FillStrategy,
    GenusGraph,
    GraphEdge,
    GraphVertex,
    InvalidGraphError,
    IoError,
    NotAPillarError,
    PlantedInstance,
    Recognition,
    ResourceLimitError,
    SchemaError,
    SimplicialComplex,
    TraceEntry,
    VerificationReport,
    additive_weight_filtration,
    bad_simplices,
    barycentric_subdivision,
    boundary_complex,
    canonical_form,
    census_to_csv,
    collapse_edge,
    complex_from_json,
    complex_to_json,
    cone,
    degree,
    derived_pillar,
    descent_measure,
    disk_map_from_json,
    disk_map_to_json,
    enumerate_types,
    filtration_from_json,
    filtration_to_json,
    generate_planted_instance,
    graph_from_canonical,
    graph_from_json,
    graph_stats,
    graph_to_dot,
    graph_to_json,
    image_face,
    is_combinatorial_ball,
    is_combinatorial_sphere,
    is_connected_complex,
    is_homologically_k_connected,
    is_pillar,
    is_pillar_face,
    join_complexes,
    link,
    low_link,
    make_rose,
    pillar_edges,
    pillar_graph,
    reduced_homology,
    remove_open_star,
    run_command,
    run_planted_descents,
    star,
    surgery_descent,
    surgery_step,
    validate_disk_map,
    validate_filtration,
    validate_graph,
    verify_suite,
    verify_suite_names,
)

__all__ = [
    "BadSimplex",
    "DegreeFilteredComplex",
    "DescentResult",
    "DiskMap",
    "Error",
    "FaceNotInComplexError",
    "FillError",
    "FillOptions",
    "FillStrategy",
    "GenusGraph",
    "GraphEdge",
    "GraphVertex",
    "InvalidGraphError",
    "IoError",
    "NotAPillarError",
    "PlantedInstance",
    "Recognition",
    "ResourceLimitError",
    "SchemaError",
    "SimplicialComplex",
    "TraceEntry",
    "VerificationReport",
    "additive_weight_filtration",
    "bad_simplices",
    "barycentric_subdivision",
    "boundary_complex",
    "canonical_form",
    "census_to_csv",
    "collapse_edge",
    "complex_from_json",
    "complex_to_json",
    "cone",
    "degree",
    "derived_pillar",
    "descent_measure",
    "disk_map_from_json",
    "disk_map_to_json",
    "enumerate_types",
    "filtration_from_json",
    "filtration_to_json",
    "generate_planted_instance",
    "graph_from_canonical",
    "graph_from_json",
    "graph_stats",
    "graph_to_dot",
    "graph_to_json",
    "image_face",
    "is_combinatorial_ball",
    "is_combinatorial_sphere",
    "is_connected_complex",
    "is_homologically_k_connected",
    "is_pillar",
    "is_pillar_face",
    "join_complexes",
    "link",
    "low_link",
    "make_rose",
    "pillar_edges",
    "pillar_graph",
    "reduced_homology",
    "remove_open_star",
    "run_command",
    "run_planted_descents",
    "star",
    "surgery_descent",
    "surgery_step",
    "validate_disk_map",
    "validate_filtration",
    "validate_graph",
    "verify_suite",
    "verify_suite_names",
]
