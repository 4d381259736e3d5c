"""
Swift walks from an arbitrary start vertex v. They exist iff
    (a) the subgraph induced on the neighbours of v has a swift configuration, and
    (b) every non-neighbour of v shares either 0 or >= 2 neighbours with v.
The block construction keeps the v-row at 1, puts the neighbour-subgraph configuration in the
middle block, fills each non-neighbour's links into N(v) with c-th roots of unity and leaves
edges among non-neighbours at phase 0.
"""
import logging
from typing import Optional

import numpy as np

from ..graph import Graph, analyze, subgraph
from ..chiral import ChiralMatrix, PhaseAssignment, build_chiral
from .auto import synthesize_auto
from .numeric import SolverConfig
from .report import CONE_THEOREM5, FEASIBLE, INFEASIBLE, UNKNOWN, SwiftReport


logger = logging.getLogger(__name__)


def cone_residual(H: ChiralMatrix, v: int) -> float:
    """Norm of H 1_{N(v)} off the v entry; zero iff span{e_v, e_E} is invariant."""
    ind = np.zeros(H.n)
    ind[list(H.graph.neighbors(v))] = 1.0
    out = H.matrix @ ind
    out[v] = 0.0
    return float(np.linalg.norm(out))


def cone_walk_report(g: Graph, v: int, hp: SolverConfig = SolverConfig()) -> SwiftReport:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside [0, {g.n})")
    if not analyze(g).is_connected:
        raise ValueError("swift cone walks are defined on connected graphs")

    nbrs = g.neighbors(v)
    nbr_set = set(nbrs)
    outside = [w for w in range(g.n) if w != v and w not in nbr_set]

    # condition (b), lowest offending vertex first
    common = {w: sorted(nbr_set.intersection(g.neighbors(w))) for w in outside}
    for w in outside:
        if len(common[w]) == 1:
            logger.warning(f"vertex {w} shares exactly one neighbour ({common[w][0]}) with {v}")
            return SwiftReport(
                INFEASIBLE, CONE_THEOREM5, g,
                reason=f"non-neighbour {w} has exactly one common neighbour with {v}", witness=w,
            )

    # condition (a): neighbours isolated inside the subgraph carry a zero row
    sub, mapping = subgraph(g, nbrs)
    inner = synthesize_auto(sub, hp)
    if inner.verdict != FEASIBLE:
        logger.warning(f"neighbour subgraph of {v} has no swift configuration ({inner.verdict}: {inner.reason})")
        back = {i: u for u, i in mapping.items()}
        return SwiftReport(
            inner.verdict, CONE_THEOREM5, g,
            reason=f"neighbour subgraph: {inner.reason}",
            witness=None if inner.witness is None else back[inner.witness],
        )

    theta = {e: 0.0 for e in g.edges}
    back = {i: u for u, i in mapping.items()}
    for (a, b), th in inner.phases.as_dict().items():
        u, w = back[a], back[b]
        theta[(min(u, w), max(u, w))] = th if u < w else -th
    for w in outside:
        c = len(common[w])
        for s, u in enumerate(common[w]):
            # entry (w, u) = exp(2 pi i s / c)
            phi = 2 * np.pi * s / c
            theta[(min(u, w), max(u, w))] = phi if w < u else -phi

    phases = PhaseAssignment.from_mapping(g, theta)
    H = build_chiral(g, phases)
    residual = cone_residual(H, v)
    verdict = FEASIBLE if residual <= inner.tol + hp.tol else UNKNOWN
    if verdict != FEASIBLE:
        logger.warning(f"cone construction from {v} left residual {residual:.3e}")
    return SwiftReport(
        verdict, CONE_THEOREM5, g,
        phases=phases if verdict == FEASIBLE else None,
        residual=residual,
        tol=inner.tol + hp.tol,
        reason=None if verdict == FEASIBLE else "construction residual above tolerance",
    )


def synthesize_cone_walk(g: Graph, v: int, hp: SolverConfig = SolverConfig()) -> Optional[ChiralMatrix]:
    """Chiral adjacency whose return probability from v is cos^2(sqrt(deg v) t), or None."""
    report = cone_walk_report(g, v, hp)
    if not report.feasible:
        return None
    return build_chiral(g, report.phases)
