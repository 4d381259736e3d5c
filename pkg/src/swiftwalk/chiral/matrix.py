from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Optional, Tuple, Union

import numpy as np

from ..graph import Graph
from .phases import PhaseAssignment


KINDS = ("adjacency", "laplacian", "general")


@dataclass(frozen=True, eq=False)
class ChiralMatrix:
    """
    Hermitian generator supported on a graph:
        * adjacency: H = A~ (zero diagonal)
        * laplacian: H = D - A~ (diagonal = degrees)
        * general:   H = D~ + A~ (free real diagonal)
    Off-diagonal entries are unit modulus on edges and zero elsewhere.
    """
    matrix: np.ndarray
    kind: str
    diagonal: np.ndarray
    graph: Graph
    phases: PhaseAssignment

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def spectrum(self) -> Tuple[np.ndarray, np.ndarray]:
        """(eigenvalues ascending, eigenvectors as columns), computed once."""
        return np.linalg.eigh(self.matrix)

    @property
    def off_diagonal(self) -> np.ndarray:
        return self.matrix - np.diag(self.diagonal)


def build_chiral(
    g: Graph,
    phases: Union[PhaseAssignment, Mapping, None] = None,
    kind: str = "adjacency",
    diagonal: Optional[np.ndarray] = None,
) -> ChiralMatrix:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {KINDS}")
    if phases is None:
        phases = PhaseAssignment.zeros(g)
    elif not isinstance(phases, PhaseAssignment):
        phases = PhaseAssignment.from_mapping(g, phases)
    elif phases.graph != g:
        raise ValueError("phases are defined on a different edge set than the graph")

    if kind == "general":
        if diagonal is None:
            raise ValueError("kind='general' needs an explicit diagonal")
        diagonal = np.asarray(diagonal, dtype=float)
        if diagonal.shape != (g.n,):
            raise ValueError(f"diagonal has shape {diagonal.shape}, expected ({g.n},)")
    elif diagonal is not None:
        raise ValueError(f"a diagonal can only be given for kind='general', not {kind!r}")
    elif kind == "laplacian":
        diagonal = g.degrees.astype(float)
    else:
        diagonal = np.zeros(g.n)

    A = np.zeros((g.n, g.n), dtype=complex)
    if g.edges:
        rows, cols = np.array(g.edges).T
        entries = np.exp(1j * phases.theta)
        A[rows, cols] = entries
        A[cols, rows] = entries.conj()

    H = np.diag(diagonal).astype(complex) + (-A if kind == "laplacian" else A)
    assert np.array_equal(H, H.conj().T), "chiral matrix must be Hermitian"
    H.setflags(write=False)
    diagonal = diagonal.copy()
    diagonal.setflags(write=False)
    return ChiralMatrix(H, kind, diagonal, g, phases)


def classical(g: Graph, kind: str = "adjacency") -> ChiralMatrix:
    """Zero-phase adjacency or Laplacian."""
    return build_chiral(g, PhaseAssignment.zeros(g), kind)


def with_phases(H: ChiralMatrix, phases: PhaseAssignment) -> ChiralMatrix:
    """Same graph, kind and diagonal, new phases."""
    diagonal = H.diagonal if H.kind == "general" else None
    return build_chiral(H.graph, phases, H.kind, diagonal)


def row_sums(H: ChiralMatrix) -> np.ndarray:
    return H.matrix @ np.ones(H.n)
