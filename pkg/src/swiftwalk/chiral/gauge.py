"""
Quasi-gauge transformations: conjugation by a diagonal unitary U = diag(exp(i a)).
They keep every site-to-site transport probability, so phases only matter up to the
fluxes around cycles.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from ..graph import Graph, components
from .matrix import ChiralMatrix, with_phases
from .phases import TWO_PI, PhaseAssignment


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GaugeTransform:
    # per-vertex angle a_j, U = diag(exp(i a_j))
    angles: np.ndarray

    def __post_init__(self):
        angles = np.asarray(self.angles, dtype=float).copy()
        angles.setflags(write=False)
        object.__setattr__(self, "angles", angles)

    @classmethod
    def identity(cls, n: int) -> "GaugeTransform":
        return cls(np.zeros(n))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "GaugeTransform":
        return cls(rng.uniform(0, TWO_PI, n))

    @property
    def unitary(self) -> np.ndarray:
        return np.diag(np.exp(1j * self.angles))

    def inverse(self) -> "GaugeTransform":
        return GaugeTransform(-self.angles)


def gauge_transform(H: ChiralMatrix, u: GaugeTransform) -> ChiralMatrix:
    """H' = U H U^dagger: the phase of edge (j, k) moves by a_j - a_k, diagonal untouched."""
    if u.angles.shape != (H.n,):
        raise ValueError(f"gauge acts on {u.angles.shape[0]} vertices, matrix has {H.n}")
    g = H.graph
    if not g.edges:
        return H
    heads, tails = np.array(g.edges).T
    # Laplacian entries are -exp(i theta), the shift is the same
    theta = H.phases.theta + u.angles[heads] - u.angles[tails]
    return with_phases(H, PhaseAssignment(g, theta))


def gauge_fix_cone(H: ChiralMatrix, apex: int) -> Tuple[ChiralMatrix, GaugeTransform]:
    """
    Pick the representative whose apex row is all ones on the apex's neighbours.
    Vertices not adjacent to the apex keep angle 0.
    """
    if H.kind == "laplacian":
        raise ValueError("gauge fixing to unit apex row applies to adjacency or general kinds")
    nbrs = H.graph.neighbors(apex)
    if not nbrs:
        raise ValueError(f"apex {apex} has no neighbours")
    angles = np.zeros(H.n)
    for k in nbrs:
        angles[k] = H.phases.theta_of(apex, k)
    u = GaugeTransform(angles)
    return gauge_transform(H, u), u


def cycle_fluxes(g: Graph, phases: PhaseAssignment) -> List[Tuple[List[int], float]]:
    """
    Oriented phase sums around a cycle basis, in [0, 2pi). These are gauge invariant and
    label the quasi-gauge class; a forest has none.
    """
    fluxes = []
    for cyc in nx.cycle_basis(g.to_networkx()):
        closed = list(cyc) + [cyc[0]]
        flux = sum(phases.theta_of(a, b) for a, b in zip(closed[:-1], closed[1:]))
        fluxes.append((list(cyc), float(np.mod(flux, TWO_PI))))
    return fluxes


def gauge_to_classical(H: ChiralMatrix) -> Optional[GaugeTransform]:
    """
    On a forest every chiral matrix is gauge equivalent to the zero-phase one; return the gauge
    that gets there. None when the graph has a cycle.
    """
    g = H.graph
    comps = components(g)
    if g.num_edges != g.n - len(comps):
        logger.debug("graph has a cycle, no gauge reaches the classical matrix")
        return None
    angles = np.zeros(g.n)
    G = g.to_networkx()
    for comp in comps:
        for p, c in nx.bfs_edges(G, comp[0]):
            angles[c] = angles[p] + H.phases.theta_of(p, c)
    return GaugeTransform(angles)
