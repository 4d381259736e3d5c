"""
Closed constructions of swift phase configurations:
    * even degrees: +pi/2 along every arc of a balanced (Eulerian) orientation
    * odd d-regular: phase 1 on a perfect matching, phase phi with cos(phi) = -1/(d-1) along a
      balanced orientation of the rest; d = 3 gives the cube roots of unity
    * complete bipartite K_{N1,N2}: products of N1-th and N2-th roots of unity
"""
import logging
from typing import Sequence

import numpy as np

from ..const import CONSTRUCTIVE_TOL
from ..graph import Graph, analyze, complete_bipartite, eulerian_circuit, perfect_matching, remove_edges
from ..chiral import PhaseAssignment
from .report import (
    COMPLETE_BIPARTITE,
    EVEN_EULERIAN,
    FEASIBLE,
    INFEASIBLE,
    ODD_REGULAR_MATCHING,
    UNKNOWN,
    SwiftReport,
    swift_residual,
)


logger = logging.getLogger(__name__)


def feasible_report(method: str, g: Graph, phases: PhaseAssignment, **certificate) -> SwiftReport:
    residual = swift_residual(phases)
    # constructions cancel exactly; anything above the tolerance is a bug
    assert residual <= CONSTRUCTIVE_TOL * max(1, g.n), f"{method} left residual {residual}"
    return SwiftReport(FEASIBLE, method, g, phases=phases, residual=residual, tol=CONSTRUCTIVE_TOL * max(1, g.n), **certificate)


def synthesize_even_degree(g: Graph) -> SwiftReport:
    odd = [v for v in range(g.n) if g.degrees[v] % 2]
    if odd:
        return SwiftReport(UNKNOWN, EVEN_EULERIAN, g, reason=f"odd-degree vertex {odd[0]}", witness=odd[0])

    orientation = eulerian_circuit(g)
    phases = PhaseAssignment.from_mapping(g, {arc: np.pi / 2 for arc in orientation.arcs})
    return feasible_report(EVEN_EULERIAN, g, phases, orientation=orientation)


def synthesize_odd_regular(g: Graph) -> SwiftReport:
    stats = analyze(g)
    d = stats.m
    if d is None or d % 2 == 0 or d < 3:
        return SwiftReport(UNKNOWN, ODD_REGULAR_MATCHING, g, reason="graph is not odd-regular with degree >= 3")

    matching = perfect_matching(g)
    if matching is None:
        if d == 3:
            logger.info("cubic graph without a perfect matching admits no swift configuration")
            return SwiftReport(INFEASIBLE, ODD_REGULAR_MATCHING, g, reason="cubic graph without a perfect matching")
        return SwiftReport(UNKNOWN, ODD_REGULAR_MATCHING, g, reason=f"{d}-regular graph without a perfect matching")

    # g - M is (d-1)-regular with d-1 even
    orientation = eulerian_circuit(remove_edges(g, matching.pairs))
    phi = float(np.arccos(-1.0 / (d - 1)))
    mapping = {e: 0.0 for e in matching.pairs}
    mapping.update({arc: phi for arc in orientation.arcs})
    phases = PhaseAssignment.from_mapping(g, mapping)
    return feasible_report(ODD_REGULAR_MATCHING, g, phases, matching=matching, orientation=orientation)


def bipartite_phases(g: Graph, side_a: Sequence[int], side_b: Sequence[int]) -> PhaseAssignment:
    """theta(a_j -> b_k) = 2 pi j / N1 + 2 pi k / N2 on a complete bipartite host."""
    n1, n2 = len(side_a), len(side_b)
    return PhaseAssignment.from_mapping(g, {
        (a, b): 2 * np.pi * j / n1 + 2 * np.pi * k / n2
        for j, a in enumerate(side_a)
        for k, b in enumerate(side_b)
    })


def synthesize_complete_bipartite(n1: int, n2: int) -> SwiftReport:
    g = complete_bipartite(n1, n2)
    if n1 < 2 or n2 < 2:
        leaf = n1 if n1 < 2 else 0
        return SwiftReport(INFEASIBLE, COMPLETE_BIPARTITE, g, reason="degree-1 vertex", witness=leaf)
    phases = bipartite_phases(g, range(n1), range(n1, n1 + n2))
    return feasible_report(COMPLETE_BIPARTITE, g, phases)
