import logging
from dataclasses import asdict, dataclass
from typing import List, Optional

import numpy as np
from tqdm import tqdm

from ..const import SPECTRAL_SLACK
from ..graph import Graph
from ..chiral import ChiralMatrix, build_chiral, random_phases
from .evolution import return_series


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SedentarityReport:
    min_return: float
    nogo_bound: Optional[float]
    d_sup: int
    degree: int
    violated: bool

    def to_dict(self):
        return asdict(self)


def nogo_bound(g: Graph, v: int):
    """
    (1 - sqrt(N) / (N - 2 d>), d>) for a Laplacian walk leaving v, where N = deg(v) and d> is the
    largest full-graph degree among the other vertices. The bound is None unless 2 d> < N.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside [0, {g.n})")
    N = int(g.degrees[v])
    others = np.delete(g.degrees, v)
    d_sup = int(others.max()) if len(others) else 0
    if 2 * d_sup >= N:
        return None, d_sup
    return 1 - np.sqrt(N) / (N - 2 * d_sup), d_sup


def sedentarity_report(H: ChiralMatrix, v: int, t_max: float = 20.0, steps: int = 2000) -> SedentarityReport:
    if H.kind != "laplacian":
        raise ValueError(f"the no-go bound applies to chiral Laplacians, got kind={H.kind!r}")
    bound, d_sup = nogo_bound(H.graph, v)
    min_return = return_series(H, v, t_max, steps).minimum()
    if bound is None:
        logger.info(f"2 d> = {2 * d_sup} >= deg({v}) = {H.graph.degrees[v]}, no finite bound")
        violated = False
    else:
        violated = min_return < bound - SPECTRAL_SLACK
        if violated:
            logger.warning(f"return from {v} dipped to {min_return:.12f} below the no-go bound {bound:.12f}")
    return SedentarityReport(min_return, bound, d_sup, int(H.graph.degrees[v]), bool(violated))


def sweep_random_laplacian(
    g: Graph,
    v: int,
    draws: int,
    rng: np.random.Generator,
    t_max: float = 20.0,
    steps: int = 2000,
    progress: bool = False,
) -> List[SedentarityReport]:
    """Sedentarity of `draws` chiral Laplacians with uniform random phases, in draw order."""
    reports = []
    for _ in tqdm(range(draws), desc="phase draws", disable=not progress):
        H = build_chiral(g, random_phases(g, rng), "laplacian")
        reports.append(sedentarity_report(H, v, t_max, steps))
    return reports
