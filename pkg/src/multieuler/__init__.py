"""Exact multi-Eulerian tour computations on strongly connected directed multigraphs."""

from .errors import (
    BadMultiplicity,
    CapExceeded,
    DimensionMismatch,
    DuplicateVertex,
    EmptyGraph,
    GraphError,
    GraphSyntaxError,
    MultiEulerError,
    NoEdges,
    NonPositiveEntry,
    NonSquare,
    NotEulerian,
    NotPeriodVector,
    NotStronglyConnected,
    SearchSpaceTooLarge,
    UnknownEdge,
    UnknownVertex,
)
from .graph import (
    DirectedMultigraph,
    Edge,
    EdgeLiftMap,
    LaplacianMatrix,
    build_graph,
    in_degree,
    is_eulerian,
    is_strongly_connected,
    laplacian,
    lift,
    multiplicity,
    out_degree,
)
from .graphfile import dump_graph, parse_graph_file
from .period import (
    EulerianessSummary,
    PeriodVector,
    analyze,
    is_period_vector,
    minimal_tour_length,
    pham_index,
    primitive_period_vector,
    unicycle_count,
)
from .rotor import (
    RotorState,
    SettlingReport,
    SettlingSummary,
    check_settles,
    default_rotor_state,
    random_rotor_state,
    rotor_step,
    run_until_periodic,
)
from .tours import (
    Tour,
    TourCount,
    TourValidation,
    construct_tour,
    count_eulerian_best,
    count_tours,
    count_tours_bruteforce,
    count_tours_from_vertex_bruteforce,
    enumerate_tours,
    validate_tour,
)
from .trees import determinant_exact, enumerate_arborescences, kappa, kappa_vector

__version__ = "0.1.0"
