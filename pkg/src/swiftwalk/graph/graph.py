import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np


logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.
        * edges are canonical (u < v), sorted and duplicate-free; use `build_graph` to get there
        * apex / center / start vertex is index 0 for every constructor in this package
        * n = 0 is allowed: it is the identity of `disjoint_union`
    """
    n: int
    edges: Tuple[Edge, ...]
    duplicates_collapsed: bool = field(default=False, compare=False)

    def __post_init__(self):
        assert self.n >= 0
        assert all(0 <= u < v < self.n for u, v in self.edges), "edges must be canonical and in range"
        assert list(self.edges) == sorted(set(self.edges)), "edges must be sorted and unique"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency_list(self) -> Tuple[Tuple[int, ...], ...]:
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def degrees(self) -> np.ndarray:
        deg = np.array([len(x) for x in self.adjacency_list], dtype=int)
        deg.setflags(write=False)
        return deg

    @cached_property
    def _edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency_list[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_index

    def edge_index(self, u: int, v: int) -> int:
        return self._edge_index[(min(u, v), max(u, v))]

    def adjacency(self) -> np.ndarray:
        A = np.zeros((self.n, self.n))
        if self.edges:
            rows, cols = np.array(self.edges).T
            A[rows, cols] = 1.0
            A[cols, rows] = 1.0
        return A

    def to_networkx(self) -> nx.Graph:
        # Sorted insertion keeps networkx traversals lowest-index-first
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        for v in range(self.n):
            G.add_edges_from((v, u) for u in self.adjacency_list[v] if u > v)
        return G


@dataclass(frozen=True)
class GraphStats:
    degrees: Tuple[int, ...]
    min_degree: int
    max_degree: int
    is_connected: bool
    is_regular: bool
    # regular degree m, None when the graph is not regular
    m: Optional[int] = None


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    seen = set()
    duplicates = False
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValueError(f"loop edge ({u}, {v}) is not allowed in a simple graph")
        e = (min(u, v), max(u, v))
        if e in seen:
            duplicates = True
        seen.add(e)
    if duplicates:
        logger.warning(f"duplicate edges collapsed, {len(seen)} distinct edges kept")
    return Graph(n, tuple(sorted(seen)), duplicates_collapsed=duplicates)


def cone(g: Graph) -> Graph:
    """Join a new apex (vertex 0) to every vertex of `g`; original vertices shift by +1."""
    edges = [(0, v + 1) for v in range(g.n)]
    edges += [(u + 1, v + 1) for u, v in g.edges]
    return Graph(g.n + 1, tuple(sorted(edges)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    edges = g1.edges + tuple((u + off, v + off) for u, v in g2.edges)
    return Graph(g1.n + g2.n, edges)


def subgraph(g: Graph, vertices: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """
    Induced subgraph relabelled 0..k-1 in increasing vertex order.
    Returns the subgraph and the old -> new vertex mapping.
    """
    keep = sorted(set(vertices))
    mapping = {v: i for i, v in enumerate(keep)}
    edges = [
        (mapping[u], mapping[v])
        for u, v in g.edges
        if u in mapping and v in mapping
    ]
    return Graph(len(keep), tuple(sorted(edges))), mapping


def components(g: Graph) -> List[List[int]]:
    """Connected components by BFS, each sorted, ordered by lowest vertex."""
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def analyze(g: Graph) -> GraphStats:
    deg = g.degrees
    if g.n == 0:
        return GraphStats((), 0, 0, is_connected=False, is_regular=False)
    lo, hi = int(deg.min()), int(deg.max())
    regular = lo == hi
    return GraphStats(
        degrees=tuple(int(d) for d in deg),
        min_degree=lo,
        max_degree=hi,
        is_connected=len(components(g)) == 1,
        is_regular=regular,
        m=hi if regular else None,
    )
