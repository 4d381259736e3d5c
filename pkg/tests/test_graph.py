import json
import logging

import numpy as np
import pytest

from swiftwalk.graph import (
    analyze,
    build_graph,
    bridged_cubic,
    complete,
    complete_bipartite,
    components,
    cone,
    cube,
    cycle,
    disjoint_union,
    empty,
    generate_family,
    no_matching_cubic,
    parse_edge_list,
    path,
    petersen,
    random_regular,
    read_graph,
    star,
    subgraph,
    wheel,
    write_graph,
)


def test_build_graph_canonicalizes_edges():
    g = build_graph(4, [(2, 1), (0, 3), (1, 0)])
    assert g.edges == ((0, 1), (0, 3), (1, 2))
    assert list(g.degrees) == [2, 2, 1, 1]
    assert not g.duplicates_collapsed


def test_build_graph_collapses_duplicates(caplog):
    with caplog.at_level(logging.WARNING):
        g = build_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.num_edges == 2
    assert g.duplicates_collapsed
    assert "duplicate" in caplog.text


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_build_graph_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        build_graph(3, edges)


def test_cone_puts_apex_first():
    g = cone(cycle(5))
    assert g.n == 6
    assert g.neighbors(0) == (1, 2, 3, 4, 5)
    assert g.has_edge(1, 2) and g.has_edge(5, 1)
    assert g == wheel(5)


def test_star_degrees():
    g = star(4)
    assert list(g.degrees) == [4, 1, 1, 1, 1]


def test_disjoint_union_with_empty_is_identity():
    g = petersen()
    assert disjoint_union(empty(0), g) == g
    assert disjoint_union(g, empty(0)) == g


def test_disjoint_union_offsets_second_graph():
    g = disjoint_union(cycle(3), path(2))
    assert g.n == 5
    assert g.edges == ((0, 1), (0, 2), (1, 2), (3, 4))
    assert components(g) == [[0, 1, 2], [3, 4]]


def test_subgraph_relabels_in_vertex_order():
    g = wheel(6)
    sub, mapping = subgraph(g, g.neighbors(0))
    assert mapping == {v: v - 1 for v in range(1, 7)}
    assert sub == cycle(6)


def test_analyze():
    stats = analyze(petersen())
    assert stats.is_connected and stats.is_regular and stats.m == 3
    stats = analyze(disjoint_union(star(2), cycle(3)))
    assert not stats.is_connected
    assert not stats.is_regular and stats.m is None
    assert (stats.min_degree, stats.max_degree) == (1, 2)
    assert not analyze(empty(0)).is_connected


def test_named_families():
    assert petersen().num_edges == 15 and analyze(petersen()).m == 3
    assert cube(3).n == 8 and analyze(cube(3)).m == 3
    assert complete(5).num_edges == 10
    assert complete_bipartite(3, 4).num_edges == 12
    assert complete_bipartite(3, 4).neighbors(0) == (3, 4, 5, 6)

    g = no_matching_cubic()
    assert g.n == 16 and analyze(g).m == 3 and analyze(g).is_connected
    g = bridged_cubic()
    assert g.n == 10 and analyze(g).m == 3 and analyze(g).is_connected


def test_random_regular_is_seeded():
    g1 = random_regular(3, 12, seed=7)
    g2 = random_regular(3, 12, seed=7)
    assert g1 == g2
    assert analyze(g1).m == 3


def test_generate_family():
    assert generate_family("wheel", 6) == wheel(6)
    assert generate_family("complete_bipartite", 3, 4) == complete_bipartite(3, 4)
    with pytest.raises(ValueError, match="unknown graph family"):
        generate_family("moebius", 8)
    with pytest.raises(ValueError, match="bad parameters"):
        generate_family("cycle", 3, 4)
    with pytest.raises(ValueError):
        generate_family("cycle", 2)


def test_parse_edge_list_skips_comments():
    text = """
    # a triangle with a tail
    4 4
    0 1
    1 2  # closing edge below
    2 0
    2 3
    """
    g = parse_edge_list(text)
    assert g.n == 4
    assert g.edges == ((0, 1), (0, 2), (1, 2), (2, 3))


@pytest.mark.parametrize("text", ["", "3\n0 1\n", "3 2\n0 1\n", "3 1\n0 1 2\n"])
def test_parse_edge_list_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_edge_list(text)


def test_graph_files(tmp_path):
    g = wheel(5)
    txt, js = tmp_path / "wheel.txt", tmp_path / "wheel.json"
    write_graph(g, txt)
    write_graph(g, js)
    assert txt.read_text(encoding="utf-8").splitlines()[0] == "6 10"
    assert json.loads(js.read_text(encoding="utf-8"))["n"] == 6
    assert read_graph(txt) == g
    assert read_graph(js) == g


def test_degrees_are_read_only():
    g = cycle(4)
    with pytest.raises(ValueError):
        g.degrees[0] = 5
    np.testing.assert_array_equal(g.adjacency().sum(axis=1), g.degrees)
