from .graph import Edge, Graph, GraphStats, build_graph, cone, disjoint_union, subgraph, components, analyze
from .families import (
    FAMILIES,
    generate_family,
    empty,
    path,
    star,
    cycle,
    complete,
    complete_bipartite,
    wheel,
    petersen,
    cube,
    no_matching_cubic,
    bridged_cubic,
    random_regular,
    random_graph,
)
from .factors import (
    Matching,
    EulerianOrientation,
    perfect_matching,
    eulerian_circuit,
    remove_edges,
    two_factor,
    bridges,
    is_bridgeless,
)
from .io import read_graph, write_graph, parse_edge_list, graph_to_dict, graph_from_dict
