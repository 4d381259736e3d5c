from dataclasses import asdict, dataclass

import numpy as np

from ..const import SPECTRAL_SLACK
from .matrix import ChiralMatrix


@dataclass(frozen=True)
class SpectralBoundReport:
    max_abs_eigenvalue: float
    bound: float
    passed: bool

    def to_dict(self):
        return asdict(self)


def _degree_bound(H: ChiralMatrix) -> float:
    """d> for adjacency kind, 2 d> for laplacian kind."""
    if H.kind == "general":
        raise NotImplementedError("no spectral bound is available for general chiral Hamiltonians")
    d_max = float(H.graph.degrees.max()) if H.n else 0.0
    return d_max if H.kind == "adjacency" else 2 * d_max


def verify_spectral_bounds(H: ChiralMatrix) -> SpectralBoundReport:
    bound = _degree_bound(H)
    eigvals = H.spectrum[0]
    max_abs = float(np.abs(eigvals).max()) if H.n else 0.0
    return SpectralBoundReport(max_abs, bound, max_abs <= bound + SPECTRAL_SLACK)


def quadratic_form_bound(H: ChiralMatrix, f: np.ndarray) -> SpectralBoundReport:
    """|f^dagger H f| against the same degree bound, for f normalized here."""
    bound = _degree_bound(H)
    f = np.asarray(f, dtype=complex)
    f = f / np.linalg.norm(f)
    value = float(abs(f.conj() @ H.matrix @ f))
    return SpectralBoundReport(value, bound, value <= bound + SPECTRAL_SLACK)
