"""
Spanning structures the swift-phase constructions are built from: perfect matchings,
balanced (Eulerian) orientations, 2-factors and bridges.
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from .graph import Edge, Graph, components


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Matching:
    # canonical (u < v) pairs, sorted
    pairs: Tuple[Edge, ...]

    def covered(self) -> List[int]:
        return sorted(x for e in self.pairs for x in e)

    def is_perfect(self, n: int) -> bool:
        return self.covered() == list(range(n))

    def to_list(self):
        return [list(e) for e in self.pairs]


@dataclass(frozen=True)
class EulerianOrientation:
    # directed arcs (tail, head); every undirected edge of the host appears exactly once
    arcs: Tuple[Edge, ...]

    def balance(self, n: int) -> np.ndarray:
        """out-degree minus in-degree per vertex"""
        bal = np.zeros(n, dtype=int)
        for a, b in self.arcs:
            bal[a] += 1
            bal[b] -= 1
        return bal

    def to_list(self):
        return [list(a) for a in self.arcs]


def perfect_matching(g: Graph) -> Optional[Matching]:
    """Exact perfect matching via the blossom algorithm; None when none exists."""
    if g.n % 2:
        return None
    mate = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    if 2 * len(mate) != g.n:
        logger.debug(f"maximum matching covers {2 * len(mate)} of {g.n} vertices")
        return None
    matching = Matching(tuple(sorted((min(u, v), max(u, v)) for u, v in mate)))
    assert matching.is_perfect(g.n)
    return matching


def eulerian_circuit(g: Graph) -> EulerianOrientation:
    """
    Balanced orientation from a closed Eulerian trail of every nontrivial component,
    each trail starting at the component's lowest vertex.
    """
    odd = [v for v in range(g.n) if g.degrees[v] % 2]
    if odd:
        raise ValueError(f"Eulerian orientation needs even degrees, odd-degree vertices: {odd}")

    G = g.to_networkx()
    arcs = []
    for comp in components(g):
        if len(comp) == 1:
            continue
        arcs.extend(nx.eulerian_circuit(G.subgraph(comp), source=comp[0]))

    orientation = EulerianOrientation(tuple((int(a), int(b)) for a, b in arcs))
    assert len(orientation.arcs) == g.num_edges
    assert not orientation.balance(g.n).any(), "unbalanced orientation"
    return orientation


def remove_edges(g: Graph, edges) -> Graph:
    drop = set(edges)
    return Graph(g.n, tuple(e for e in g.edges if e not in drop))


def two_factor(g: Graph) -> Optional[List[List[int]]]:
    """
    Exhaustive search for a spanning 2-regular subgraph (a cover by vertex-disjoint cycles).
    Desk scale only: backtracks over the edge list with degree pruning.
    Returns the cycles as vertex sequences, or None.
    """
    if g.n == 0:
        return []
    if g.degrees.min() < 2:
        return None

    last_edge = np.zeros(g.n, dtype=int)
    for i, (u, v) in enumerate(g.edges):
        last_edge[u] = last_edge[v] = i
    deg = np.zeros(g.n, dtype=int)
    chosen = []

    def search(i: int) -> bool:
        if i == g.num_edges:
            return bool((deg == 2).all())
        u, v = g.edges[i]
        for take in (True, False):
            if take and (deg[u] == 2 or deg[v] == 2):
                continue
            if take:
                deg[u] += 1
                deg[v] += 1
                chosen.append((u, v))
            closed_ok = all(deg[x] == 2 for x in (u, v) if last_edge[x] == i)
            if closed_ok and search(i + 1):
                return True
            if take:
                deg[u] -= 1
                deg[v] -= 1
                chosen.pop()
        return False

    if not search(0):
        return None

    factor = Graph(g.n, tuple(sorted(chosen)))
    cycles = []
    for comp in components(factor):
        # walk the cycle from its lowest vertex
        walk = [comp[0]]
        prev, cur = None, comp[0]
        while True:
            nxt = [w for w in factor.neighbors(cur) if w != prev][0]
            if nxt == comp[0]:
                break
            walk.append(nxt)
            prev, cur = cur, nxt
        cycles.append(walk)
    return cycles


def bridges(g: Graph) -> List[Edge]:
    return sorted((min(u, v), max(u, v)) for u, v in nx.bridges(g.to_networkx()))


def is_bridgeless(g: Graph) -> bool:
    return not bridges(g)

