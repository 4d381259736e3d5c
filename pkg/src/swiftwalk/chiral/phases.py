import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Mapping, Tuple

import numpy as np

from ..const import UNIT_MODULUS_TOL
from ..graph import Edge, Graph


TWO_PI = 2 * np.pi


@dataclass(frozen=True, eq=False)
class PhaseAssignment:
    """
    Antisymmetric edge phases on a host graph.
    `theta[i]` belongs to the canonical edge `graph.edges[i] = (u, v)`, u < v, read in the
    orientation u -> v, so the matrix entry (u, v) is exp(i theta) and (v, u) its conjugate.
    Angles are kept in [0, 2pi).
    """
    graph: Graph
    theta: np.ndarray

    def __post_init__(self):
        theta = np.mod(np.asarray(self.theta, dtype=float), TWO_PI)
        assert theta.shape == (self.graph.num_edges,), "one angle per edge"
        theta.setflags(write=False)
        object.__setattr__(self, "theta", theta)

    @classmethod
    def zeros(cls, g: Graph) -> "PhaseAssignment":
        return cls(g, np.zeros(g.num_edges))

    @classmethod
    def from_mapping(cls, g: Graph, phases: Mapping[Edge, float]) -> "PhaseAssignment":
        """
        Build from {(u, v): theta_uv}. Either orientation may be given; the reverse one is
        stored as -theta. The keys must cover exactly the edges of `g`.
        """
        theta = np.full(g.num_edges, np.nan)
        for (u, v), th in phases.items():
            u, v = int(u), int(v)
            if not g.has_edge(u, v):
                raise ValueError(f"phase given on non-edge ({u}, {v})")
            i = g.edge_index(u, v)
            if not np.isnan(theta[i]):
                raise ValueError(f"edge ({u}, {v}) carries more than one phase")
            theta[i] = th if u < v else -th
        missing = [g.edges[i] for i in np.flatnonzero(np.isnan(theta))]
        if missing:
            raise ValueError(f"missing phases on edges {missing}")
        return cls(g, theta)

    @classmethod
    def from_matrix(cls, g: Graph, H: np.ndarray) -> "PhaseAssignment":
        """Read the phases off the upper triangle of a matrix supported on `g`."""
        if not g.edges:
            return cls.zeros(g)
        rows, cols = np.array(g.edges).T
        entries = H[rows, cols]
        if np.abs(np.abs(entries) - 1).max() > UNIT_MODULUS_TOL:
            raise ValueError("off-diagonal entries are not unit modulus")
        return cls(g, np.angle(entries))

    def theta_of(self, u: int, v: int) -> float:
        """Angle in the orientation u -> v."""
        th = self.theta[self.graph.edge_index(u, v)]
        return float(th) if u < v else float(np.mod(-th, TWO_PI))

    def as_dict(self) -> Dict[Edge, float]:
        return {e: float(th) for e, th in zip(self.graph.edges, self.theta)}

    def relabel(self, mapping: Mapping[int, int], host: Graph) -> "PhaseAssignment":
        """Carry the phases to `host` through the vertex map old -> new."""
        moved = {(mapping[u], mapping[v]): th for (u, v), th in self.as_dict().items()}
        return PhaseAssignment.from_mapping(host, moved)

    def to_dict(self) -> dict:
        return {
            "edges": [
                {"u": int(u), "v": int(v), "theta": float(th)}
                for (u, v), th in zip(self.graph.edges, self.theta)
            ]
        }

    @classmethod
    def from_dict(cls, g: Graph, d: dict) -> "PhaseAssignment":
        return cls.from_mapping(g, {(int(e["u"]), int(e["v"])): float(e["theta"]) for e in d["edges"]})


def merge_phases(host: Graph, *parts: Tuple[PhaseAssignment, Mapping[int, int]]) -> PhaseAssignment:
    """Combine phase assignments living on disjoint pieces of `host`; edges left over get 0."""
    merged = {e: 0.0 for e in host.edges}
    for phases, mapping in parts:
        for (u, v), th in phases.as_dict().items():
            a, b = mapping[u], mapping[v]
            merged[(min(a, b), max(a, b))] = th if a < b else -th
    return PhaseAssignment.from_mapping(host, merged)


def random_phases(g: Graph, rng: np.random.Generator) -> PhaseAssignment:
    return PhaseAssignment(g, rng.uniform(0, TWO_PI, g.num_edges))


def read_phases(fpath, g: Graph) -> PhaseAssignment:
    d = json.loads(Path(fpath).read_text(encoding="utf-8"))
    return PhaseAssignment.from_dict(g, d)


def write_phases(phases: PhaseAssignment, fpath):
    Path(fpath).write_text(json.dumps(phases.to_dict(), sort_keys=True, indent=2), encoding="utf-8")
