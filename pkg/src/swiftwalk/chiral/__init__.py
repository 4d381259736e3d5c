from .phases import PhaseAssignment, merge_phases, random_phases, read_phases, write_phases
from .matrix import KINDS, ChiralMatrix, build_chiral, classical, with_phases, row_sums
from .gauge import GaugeTransform, gauge_transform, gauge_fix_cone, cycle_fluxes, gauge_to_classical
from .bounds import SpectralBoundReport, verify_spectral_bounds, quadratic_form_bound
