"""Exact vertex and edge metric dimensions of small graphs.

Builds theta and daisy graph families with their closed-form landmark
sets, solves dimensions exactly by exhaustive search, and scans leafless
graphs against the 2c(G)-1 ceiling.
"""

from thetadim._core import backend_name
from thetadim.daisy import DaisyParams, daisy_graph, glue_at_vertex, is_daisy
from thetadim.graphs import (
    BlockDecomposition,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    block_decomposition,
    build_graph,
    cyclomatic_number,
    is_connected,
    is_cycle,
    is_two_connected,
    min_degree,
    vertex_edge_distance,
)
from thetadim.formats import (
    from_graph6,
    read_edge_list,
    read_graph6_lines,
    to_graph6,
    write_edge_list,
)
from thetadim.harness import (
    GraphClassification,
    GraphRecord,
    VerificationReport,
    canonical_form,
    check_graph,
    classify,
    enumerate_leafless,
    scan,
)
from thetadim.solver import (
    DimensionResult,
    GeneratorKind,
    LandmarkSet,
    distance_signature,
    extend_to_generator,
    is_generator,
    metric_dimension,
)
from thetadim.theta import (
    LabeledTheta,
    ThetaParams,
    dim2_generator,
    edim2_generator,
    is_nice_set,
    is_theta,
    iter_theta_params,
    nice_set_generator,
    predicted_dim,
    predicted_edim,
    theta_graph,
)

__version__ = "0.1.0"

__all__ = [
    "BlockDecomposition",
    "DaisyParams",
    "DimensionResult",
    "DistanceMatrix",
    "GeneratorKind",
    "Graph",
    "GraphClassification",
    "GraphRecord",
    "LabeledTheta",
    "LandmarkSet",
    "ThetaParams",
    "VerificationReport",
    "all_pairs_distances",
    "backend_name",
    "block_decomposition",
    "build_graph",
    "canonical_form",
    "check_graph",
    "classify",
    "cyclomatic_number",
    "daisy_graph",
    "dim2_generator",
    "distance_signature",
    "edim2_generator",
    "enumerate_leafless",
    "extend_to_generator",
    "from_graph6",
    "glue_at_vertex",
    "is_connected",
    "is_cycle",
    "is_daisy",
    "is_generator",
    "is_nice_set",
    "is_theta",
    "is_two_connected",
    "iter_theta_params",
    "metric_dimension",
    "min_degree",
    "nice_set_generator",
    "predicted_dim",
    "predicted_edim",
    "read_edge_list",
    "read_graph6_lines",
    "scan",
    "theta_graph",
    "to_graph6",
    "vertex_edge_distance",
    "write_edge_list",
]
