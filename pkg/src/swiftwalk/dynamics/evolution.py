from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from ..const import GRID_ZERO_TOL
from ..chiral import ChiralMatrix


class Propagator:
    """
    exp(-i H t) from the cached eigendecomposition H = V diag(E) V^dagger.
    Read-only after construction, so evaluations at distinct times are independent.
    """

    def __init__(self, H: ChiralMatrix):
        self.n = H.n
        self.energies, self.states = H.spectrum

    def columns(self, source: int, times) -> np.ndarray:
        """Rows are exp(-i H t) e_source for each t in `times`: shape (len(times), n)."""
        if not 0 <= source < self.n:
            raise ValueError(f"source {source} outside [0, {self.n})")
        times = np.atleast_1d(np.asarray(times, dtype=float))
        weights = np.exp(-1j * np.outer(times, self.energies)) * self.states[source].conj()
        out = weights @ self.states.T
        # exp(0) is the identity
        at_zero = times == 0
        if at_zero.any():
            out[at_zero] = 0.0
            out[at_zero, source] = 1.0
        return out

    def column(self, source: int, t: float) -> np.ndarray:
        return self.columns(source, [t])[0]


def propagator_column(H: ChiralMatrix, source: int, t: float) -> np.ndarray:
    return Propagator(H).column(source, t)


def transport_probability(H: ChiralMatrix, j: int, k: int, t: float) -> float:
    if not 0 <= k < H.n:
        raise ValueError(f"target {k} outside [0, {H.n})")
    return float(abs(propagator_column(H, j, t)[k]) ** 2)


@dataclass(frozen=True, eq=False)
class EvolutionSeries:
    times: np.ndarray
    values: np.ndarray
    source: int
    target: int
    generator: str

    def minimum(self) -> float:
        return float(self.values.min())

    def argmin_time(self) -> float:
        return float(self.times[int(np.argmin(self.values))])

    def first_zero(self, tol: float = GRID_ZERO_TOL) -> Optional[float]:
        """First grid time at a local minimum with value <= tol."""
        p = self.values
        for i in range(len(p)):
            if p[i] <= tol and (i + 1 == len(p) or p[i] <= p[i + 1]):
                return float(self.times[i])
        return None

    def to_csv(self, fpath):
        np.savetxt(
            Path(fpath), np.column_stack((self.times, self.values)),
            fmt="%.17g", delimiter=",", header="t,p", comments="",
        )


def time_grid(t_max: float, steps: int) -> np.ndarray:
    if steps < 2:
        raise ValueError(f"a time grid needs steps >= 2, got {steps}")
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    return np.linspace(0.0, t_max, steps)


def transport_series(H: ChiralMatrix, j: int, k: int, t_max: float, steps: int) -> EvolutionSeries:
    times = time_grid(t_max, steps)
    amps = Propagator(H).columns(j, times)[:, k]
    return EvolutionSeries(times, np.abs(amps) ** 2, j, k, H.kind)


def return_series(H: ChiralMatrix, v: int, t_max: float, steps: int) -> EvolutionSeries:
    return transport_series(H, v, v, t_max, steps)
