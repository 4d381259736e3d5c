from dataclasses import asdict, dataclass

import numpy as np

from ..chiral import ChiralMatrix


@dataclass(frozen=True)
class QslReport:
    mean_energy: float
    delta_h: float
    ground_energy: float
    tau_qsl: float
    tau_s: float

    def to_dict(self):
        return {k: (v if np.isfinite(v) else None) for k, v in asdict(self).items()}


def _quarter_period(x: float) -> float:
    return np.pi / (2 * x) if x > 0 else float("inf")


def qsl(H: ChiralMatrix, v: int) -> QslReport:
    """
    Speed limit for leaving e_v. The moments come from row v alone: <H> = H_vv and
    dH^2 = sum_{k != v} |H_vk|^2, which is deg(v) for any unit-modulus phases.
    """
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} outside [0, {H.n})")
    row = H.matrix[v]
    mean = float(row[v].real)
    delta_h = float(np.sqrt(np.sum(np.abs(np.delete(row, v)) ** 2)))
    ground = float(H.spectrum[0][0])
    tau_qsl = max(_quarter_period(delta_h), _quarter_period(mean - ground))
    tau_s = _quarter_period(np.sqrt(H.graph.degrees[v]))
    return QslReport(mean, delta_h, ground, float(tau_qsl), float(tau_s))
