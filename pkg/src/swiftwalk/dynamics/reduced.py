import logging
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from ..const import SUBSPACE_TOL
from ..graph import Graph
from ..chiral import ChiralMatrix, PhaseAssignment, build_chiral
from .closed_forms import closed_form_laplacian_reduced


logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ReducedBlock:
    """
    H restricted to span{e_source, e_E}, where e_E is the normalized off-diagonal image of e_source:
        [[a,        coupling],
         [coupling, k       ]]
    with coupling = sqrt(deg(source)).
    """
    a: float
    k: float
    coupling: float
    basis: Tuple[np.ndarray, np.ndarray]
    source: int
    residual: float

    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.coupling], [self.coupling, self.k]])

    def return_probability(self, t) -> np.ndarray:
        """|<e_source| exp(-i B t) |e_source>|^2 through the 2x2 eigendecomposition."""
        energies, states = np.linalg.eigh(self.matrix())
        t = np.asarray(t, dtype=float)
        amp = (np.abs(states[0]) ** 2 * np.exp(-1j * np.multiply.outer(t, energies))).sum(axis=-1)
        return np.abs(amp) ** 2


def reduce_to_block(H: ChiralMatrix, v: int) -> Optional[ReducedBlock]:
    """The 2x2 block at v, or None when span{e_v, e_E} is not invariant under H."""
    if not 0 <= v < H.n:
        raise ValueError(f"vertex {v} outside [0, {H.n})")
    if H.graph.degrees[v] == 0:
        return None

    e_v = np.zeros(H.n, dtype=complex)
    e_v[v] = 1.0
    image = H.off_diagonal @ e_v
    coupling = float(np.linalg.norm(image))
    e_E = image / coupling

    a = float(H.matrix[v, v].real)
    He = H.matrix @ e_E
    k = float(np.vdot(e_E, He).real)
    # e_E has no weight on v, so <e_v|H e_E> is the coupling itself
    residual = float(np.linalg.norm(He - k * e_E - coupling * e_v))
    if residual >= SUBSPACE_TOL:
        logger.debug(f"span at vertex {v} is not invariant (residual {residual:.3e})")
        return None
    return ReducedBlock(a, k, coupling, (e_v, e_E), v, residual)


def laplacian_reduced_k(H: ChiralMatrix, v: int) -> Optional[Tuple[float, Callable]]:
    """k of the Laplacian block at v with its closed-form return curve, or None without a block."""
    if H.kind != "laplacian":
        raise ValueError(f"expected a laplacian, got kind={H.kind!r}")
    block = reduce_to_block(H, v)
    if block is None:
        return None
    N = int(H.graph.degrees[v])
    return block.k, (lambda t: closed_form_laplacian_reduced(block.k, N, t))


def grover_oracle_laplacian(g: Graph, apex: int) -> ChiralMatrix:
    """
    Classical Laplacian with the apex diagonal lowered by N-1, N the apex degree. The apex block is
    [[1, sqrt(N)], [sqrt(N), 1]] and the return curve is cos^2(sqrt(N) t).
    """
    if not 0 <= apex < g.n:
        raise ValueError(f"apex {apex} outside [0, {g.n})")
    N = int(g.degrees[apex])
    if N != g.n - 1:
        raise ValueError(f"vertex {apex} has degree {N}, an oracle apex must be adjacent to all {g.n - 1} others")
    diagonal = g.degrees.astype(float)
    diagonal[apex] -= N - 1
    # phase pi on every edge gives the -A of a classical Laplacian
    minus_a = PhaseAssignment(g, np.full(g.num_edges, np.pi))
    return build_chiral(g, minus_a, "general", diagonal)
