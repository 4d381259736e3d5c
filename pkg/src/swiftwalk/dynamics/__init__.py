from .evolution import (
    EvolutionSeries,
    Propagator,
    propagator_column,
    transport_probability,
    transport_series,
    return_series,
    time_grid,
)
from .closed_forms import (
    closed_form_cone_adjacency,
    closed_form_swift,
    closed_form_laplacian_cone,
    closed_form_laplacian_reduced,
)
from .reduced import ReducedBlock, reduce_to_block, laplacian_reduced_k, grover_oracle_laplacian
from .qsl import QslReport, qsl
from .sedentarity import SedentarityReport, nogo_bound, sedentarity_report, sweep_random_laplacian
