import logging
from typing import Optional

import networkx as nx

from ..graph import Graph, analyze, components, subgraph
from .constructive import bipartite_phases, synthesize_even_degree, synthesize_odd_regular, feasible_report
from .numeric import SolverConfig, numeric_swift_solver
from .report import (
    AUTO,
    COMPLETE_BIPARTITE,
    INFEASIBLE,
    UNKNOWN,
    SwiftReport,
    relabel_report,
    synthesize_union,
)


logger = logging.getLogger(__name__)

ROUTES = ("auto", "even", "odd-regular", "bipartite", "numeric")


def complete_bipartite_sides(g: Graph):
    """(side_a, side_b) when `g` is connected complete bipartite, else None. side_a holds vertex 0."""
    if g.n < 2 or len(components(g)) != 1:
        return None
    G = g.to_networkx()
    if not nx.is_bipartite(G):
        return None
    side_a, side_b = (sorted(s) for s in nx.bipartite.sets(G))
    if 0 not in side_a:
        side_a, side_b = side_b, side_a
    if g.num_edges != len(side_a) * len(side_b):
        return None
    return side_a, side_b


def synthesize_bipartite(g: Graph) -> SwiftReport:
    sides = complete_bipartite_sides(g)
    if sides is None:
        return SwiftReport(UNKNOWN, COMPLETE_BIPARTITE, g, reason="graph is not complete bipartite")
    side_a, side_b = sides
    if min(len(side_a), len(side_b)) < 2:
        leaf = side_b[0] if len(side_a) < 2 else side_a[0]
        return SwiftReport(INFEASIBLE, COMPLETE_BIPARTITE, g, reason="degree-1 vertex", witness=leaf)
    return feasible_report(COMPLETE_BIPARTITE, g, bipartite_phases(g, side_a, side_b))


def _synthesize_connected(g: Graph, hp: SolverConfig) -> SwiftReport:
    stats = analyze(g)
    if g.n > 1 and stats.min_degree == 1:
        leaf = stats.degrees.index(1)
        return SwiftReport(INFEASIBLE, AUTO, g, reason="degree-1 vertex", witness=leaf)

    if all(d % 2 == 0 for d in stats.degrees):
        return synthesize_even_degree(g)

    if stats.is_regular and stats.m % 2 == 1:
        report = synthesize_odd_regular(g)
        if report.verdict != UNKNOWN:
            return report
        logger.info(f"{report.reason}, falling back")

    if complete_bipartite_sides(g) is not None:
        return synthesize_bipartite(g)

    return numeric_swift_solver(g, hp)


def synthesize_auto(g: Graph, hp: SolverConfig = SolverConfig()) -> SwiftReport:
    """
    Per connected component: degree-1 check, even route, odd-regular route, complete bipartite
    formula, numeric fallback. Components are recombined on the original numbering.
    """
    comps = components(g)
    reports, order = [], []
    for comp in comps:
        sub, _ = subgraph(g, comp)
        rep = _synthesize_connected(sub, hp)
        logger.info(f"component of {sub.n} vertices: {rep.verdict} via {rep.method}")
        reports.append(rep)
        order.extend(comp)

    if len(reports) == 1:
        # a single component is already numbered like g
        return relabel_report(reports[0], {v: v for v in range(g.n)}, g)

    union = synthesize_union(reports)
    return relabel_report(union, {i: v for i, v in enumerate(order)}, g)


def synthesize(g: Graph, method: str = "auto", hp: Optional[SolverConfig] = None) -> SwiftReport:
    """Run one named route on the whole graph, or the dispatcher for 'auto'."""
    hp = hp or SolverConfig()
    if method == "auto":
        return synthesize_auto(g, hp)
    if method == "even":
        return synthesize_even_degree(g)
    if method == "odd-regular":
        return synthesize_odd_regular(g)
    if method == "bipartite":
        return synthesize_bipartite(g)
    if method == "numeric":
        return numeric_swift_solver(g, hp)
    raise ValueError(f"unknown synthesis method {method!r}, expected one of {ROUTES}")
