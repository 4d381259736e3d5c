from .report import (
    FEASIBLE,
    INFEASIBLE,
    UNKNOWN,
    METHODS,
    SwiftReport,
    check_swift_configuration,
    check_swift_phases,
    is_swift_adjacency,
    swift_residual,
    synthesize_union,
    write_report,
)
from .constructive import synthesize_even_degree, synthesize_odd_regular, synthesize_complete_bipartite
from .numeric import SolverConfig, numeric_swift_solver
from .auto import ROUTES, synthesize, synthesize_auto, synthesize_bipartite, complete_bipartite_sides
from .cone import cone_residual, cone_walk_report, synthesize_cone_walk
