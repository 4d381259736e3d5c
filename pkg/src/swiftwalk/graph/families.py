"""
Graph families with a fixed vertex numbering: the apex / center always comes first.
"""
from itertools import combinations
from typing import Optional

import networkx as nx
import numpy as np

from .graph import Graph, build_graph, cone


def _require(ok: bool, msg: str):
    if not ok:
        raise ValueError(msg)


def empty(n: int) -> Graph:
    _require(n >= 0, f"empty graph needs n >= 0, got {n}")
    return Graph(n, ())


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n_leaves: int) -> Graph:
    """Center 0, leaves 1..N."""
    _require(n_leaves >= 1, f"star needs N >= 1 leaves, got {n_leaves}")
    return cone(empty(n_leaves))


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs N >= 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs N >= 1, got {n}")
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(n1: int, n2: int) -> Graph:
    """Side A is 0..N1-1, side B is N1..N1+N2-1."""
    _require(n1 >= 1 and n2 >= 1, f"complete bipartite needs N1, N2 >= 1, got ({n1}, {n2})")
    return build_graph(n1 + n2, [(j, n1 + k) for j in range(n1) for k in range(n2)])


def wheel(n: int) -> Graph:
    """Apex 0 over the rim cycle 1..N."""
    return cone(cycle(n))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def cube(d: int) -> Graph:
    """Hypercube Q_d: vertices are d-bit strings, edges flip one bit."""
    _require(d >= 1, f"cube needs d >= 1, got {d}")
    n = 1 << d
    return build_graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def _subdivided_k4(off: int):
    # K_4 on off+0..off+3 with edge (off+0, off+1) subdivided by off+4
    a, b, c, d, s = (off + i for i in range(5))
    return [(a, c), (a, d), (b, c), (b, d), (c, d), (a, s), (s, b)], s


def no_matching_cubic() -> Graph:
    """
    16-vertex cubic graph without a perfect matching: hub 0 joined to the subdivision vertex
    of three subdivided K_4 blocks. Deleting the hub leaves three odd components.
    """
    edges = []
    for blk in range(3):
        blk_edges, s = _subdivided_k4(1 + 5 * blk)
        edges += blk_edges + [(0, s)]
    return build_graph(16, edges)


def bridged_cubic() -> Graph:
    """10-vertex cubic graph with a bridge that still has a perfect matching."""
    e1, s1 = _subdivided_k4(0)
    e2, s2 = _subdivided_k4(5)
    return build_graph(10, e1 + e2 + [(s1, s2)])


def random_regular(d: int, n: int, seed: Optional[int] = None) -> Graph:
    G = nx.random_regular_graph(d, n, seed=seed)
    return build_graph(n, G.edges())


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    mask = rng.random((n, n)) < p
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if mask[u, v]])


FAMILIES = {
    "empty": empty,
    "path": path,
    "star": star,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "wheel": wheel,
    "petersen": petersen,
    "cube": cube,
    "no_matching_cubic": no_matching_cubic,
    "bridged_cubic": bridged_cubic,
}


def generate_family(family: str, *params: int) -> Graph:
    if family not in FAMILIES:
        raise ValueError(f"unknown graph family {family!r}, expected one of {sorted(FAMILIES)}")
    try:
        return FAMILIES[family](*params)
    except TypeError as e:
        raise ValueError(f"bad parameters {params} for family {family!r}: {e}") from e
