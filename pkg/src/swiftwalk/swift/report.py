import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..const import SWIFT_TOL
from ..graph import EulerianOrientation, Graph, Matching, disjoint_union
from ..chiral import ChiralMatrix, PhaseAssignment, build_chiral, row_sums


FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNKNOWN = "unknown"

EVEN_EULERIAN = "even_eulerian"
ODD_REGULAR_MATCHING = "odd_regular_matching"
COMPLETE_BIPARTITE = "complete_bipartite"
UNION = "union"
CONE_THEOREM5 = "cone_theorem5"
NUMERIC = "numeric"
# dispatcher-level criteria (degree-1 vertices)
AUTO = "auto"
METHODS = (AUTO, EVEN_EULERIAN, ODD_REGULAR_MATCHING, COMPLETE_BIPARTITE, UNION, CONE_THEOREM5, NUMERIC)


@dataclass(frozen=True, eq=False)
class SwiftReport:
    """
    Outcome of a swift phase synthesis.
        * feasible: `phases` present and `residual` = ||A~ 1||_2 <= `tol`
        * infeasible: `reason` cites the criterion; `witness` names a vertex when there is one
        * unknown: no route settled it
    """
    verdict: str
    method: str
    graph: Graph
    phases: Optional[PhaseAssignment] = None
    residual: float = float("nan")
    tol: float = SWIFT_TOL
    matching: Optional[Matching] = None
    orientation: Optional[EulerianOrientation] = None
    reason: Optional[str] = None
    witness: Optional[int] = None
    # final residual of every numeric restart, in run order
    restart_residuals: Tuple[float, ...] = field(default=())

    def __post_init__(self):
        if self.verdict == FEASIBLE:
            assert self.phases is not None and self.residual <= self.tol, "feasible report needs phases within tol"
        if self.verdict == INFEASIBLE:
            assert self.reason, "infeasible report must cite a criterion"

    @property
    def feasible(self) -> bool:
        return self.verdict == FEASIBLE

    def to_dict(self) -> dict:
        certificate = {}
        if self.matching is not None:
            certificate["matching"] = self.matching.to_list()
        if self.orientation is not None:
            certificate["arcs"] = self.orientation.to_list()
        return {
            "verdict": self.verdict,
            "method": self.method,
            "residual": None if np.isnan(self.residual) else float(self.residual),
            "tol": self.tol,
            "phases": None if self.phases is None else self.phases.to_dict(),
            "certificate": certificate or None,
            "reason": self.reason,
            "witness": self.witness,
            "restart_residuals": [float(r) for r in self.restart_residuals],
        }


def write_report(report: SwiftReport, fpath, extra: Optional[dict] = None):
    payload = report.to_dict()
    payload.update(extra or {})
    Path(fpath).write_text(json.dumps(payload, sort_keys=True, indent=2), encoding="utf-8")


def swift_residual(phases: PhaseAssignment) -> float:
    """||A~ 1||_2 of the chiral adjacency carrying `phases`."""
    return float(np.linalg.norm(row_sums(build_chiral(phases.graph, phases))))


def check_swift_configuration(H: ChiralMatrix, tol: float = SWIFT_TOL) -> bool:
    """||H 1||_inf <= tol for any kind. A classical Laplacian passes; see `is_swift_adjacency`."""
    return bool(np.abs(row_sums(H)).max(initial=0.0) <= tol)


def is_swift_adjacency(H: ChiralMatrix, tol: float = SWIFT_TOL) -> bool:
    return H.kind == "adjacency" and check_swift_configuration(H, tol)


def check_swift_phases(phases: PhaseAssignment, tol: float = SWIFT_TOL) -> bool:
    return check_swift_configuration(build_chiral(phases.graph, phases), tol)


def _offset_pairs(pairs: Sequence[Tuple[int, int]], off: int):
    return tuple((a + off, b + off) for a, b in pairs)


def synthesize_union(reports: List[SwiftReport]) -> SwiftReport:
    """Compose per-component reports on the disjoint union of their graphs, in list order."""
    host = Graph(0, ())
    for rep in reports:
        host = disjoint_union(host, rep.graph)

    for rep in reports:
        if rep.verdict != FEASIBLE:
            # an infeasible part outranks an unknown one
            worst = next((r for r in reports if r.verdict == INFEASIBLE), rep)
            off = 0
            for r in reports:
                if r is worst:
                    break
                off += r.graph.n
            witness = None if worst.witness is None else worst.witness + off
            return SwiftReport(worst.verdict, UNION, host, reason=worst.reason, witness=witness)

    theta, pairs, arcs = [], [], []
    off = 0
    has_matching = has_orientation = False
    for rep in reports:
        theta.append(rep.phases.theta)
        if rep.matching is not None:
            has_matching = True
            pairs += _offset_pairs(rep.matching.pairs, off)
        if rep.orientation is not None:
            has_orientation = True
            arcs += _offset_pairs(rep.orientation.arcs, off)
        off += rep.graph.n

    # g2 edges are offset past every g1 vertex, so concatenation keeps canonical edge order
    phases = PhaseAssignment(host, np.concatenate(theta) if theta else np.zeros(0))
    # per-component worst case, each part was accepted against its own tol
    residual = max((r.residual for r in reports), default=0.0)
    tol = max((r.tol for r in reports), default=SWIFT_TOL)
    return SwiftReport(
        FEASIBLE,
        UNION,
        host,
        phases=phases,
        residual=residual,
        tol=tol,
        matching=Matching(tuple(sorted(pairs))) if has_matching else None,
        orientation=EulerianOrientation(tuple(arcs)) if has_orientation else None,
    )


def relabel_report(report: SwiftReport, mapping: Mapping[int, int], host: Graph) -> SwiftReport:
    """Move a report to `host` through the vertex map old -> new."""
    def move(pairs):
        return tuple((mapping[a], mapping[b]) for a, b in pairs)

    phases = None if report.phases is None else report.phases.relabel(mapping, host)
    matching = None
    if report.matching is not None:
        matching = Matching(tuple(sorted((min(e), max(e)) for e in move(report.matching.pairs))))
    orientation = None
    if report.orientation is not None:
        orientation = EulerianOrientation(move(report.orientation.arcs))
    return SwiftReport(
        report.verdict,
        report.method,
        host,
        phases=phases,
        residual=report.residual,
        tol=report.tol,
        matching=matching,
        orientation=orientation,
        reason=report.reason,
        witness=None if report.witness is None else mapping[report.witness],
        restart_residuals=report.restart_residuals,
    )
