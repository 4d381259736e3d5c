from itertools import combinations

import pytest

from swiftwalk.graph import (
    Graph,
    bridged_cubic,
    bridges,
    build_graph,
    complete,
    cube,
    cycle,
    disjoint_union,
    eulerian_circuit,
    is_bridgeless,
    no_matching_cubic,
    perfect_matching,
    petersen,
    random_graph,
    random_regular,
    remove_edges,
    two_factor,
    wheel,
)


def _has_perfect_matching_brute(g: Graph) -> bool:
    if g.n % 2:
        return False

    def match(free):
        if not free:
            return True
        u = free[0]
        return any(match([x for x in free[1:] if x != w]) for w in g.neighbors(u) if w in free[1:])

    return match(list(range(g.n)))


def test_perfect_matching_petersen():
    m = perfect_matching(petersen())
    assert m is not None
    assert m.is_perfect(10)
    assert all(petersen().has_edge(u, v) for u, v in m.pairs)


def test_perfect_matching_absent():
    assert perfect_matching(no_matching_cubic()) is None
    assert perfect_matching(cycle(5)) is None
    assert perfect_matching(wheel(5)) is not None


def test_perfect_matching_against_brute_force(rng):
    for _ in range(60):
        n = int(rng.integers(2, 11))
        g = random_graph(n, float(rng.uniform(0.15, 0.6)), rng)
        assert (perfect_matching(g) is not None) == _has_perfect_matching_brute(g)


@pytest.mark.parametrize("g", [cycle(7), complete(5), disjoint_union(cycle(3), complete(5)), cube(4)])
def test_eulerian_circuit_is_balanced(g):
    orientation = eulerian_circuit(g)
    assert len(orientation.arcs) == g.num_edges
    assert sorted((min(a), max(a)) for a in orientation.arcs) == list(g.edges)
    assert not orientation.balance(g.n).any()


def test_eulerian_circuit_rejects_odd_degrees():
    with pytest.raises(ValueError, match="odd-degree"):
        eulerian_circuit(petersen())


def test_remove_matching_leaves_even_graph():
    g = petersen()
    rest = remove_edges(g, perfect_matching(g).pairs)
    assert rest.num_edges == 10
    assert set(rest.degrees) == {2}


def test_two_factor_covers_every_vertex():
    cycles = two_factor(petersen())
    assert cycles is not None
    assert sorted(v for c in cycles for v in c) == list(range(10))
    # Petersen is not Hamiltonian
    assert len(cycles) >= 2
    for c in cycles:
        closed = c + [c[0]]
        assert all(petersen().has_edge(a, b) for a, b in zip(closed, closed[1:]))


def test_two_factor_absent():
    assert two_factor(no_matching_cubic()) is None
    assert two_factor(build_graph(4, [(0, 1), (1, 2), (2, 3)])) is None


@pytest.mark.parametrize("seed", range(6))
def test_cubic_two_factor_iff_perfect_matching(seed):
    g = random_regular(3, 4 + 2 * seed, seed=seed)
    assert (two_factor(g) is not None) == (perfect_matching(g) is not None)


def test_bridges():
    assert bridges(bridged_cubic()) == [(4, 9)]
    assert not is_bridgeless(bridged_cubic())
    assert is_bridgeless(petersen())
    assert bridges(build_graph(3, combinations(range(3), 2))) == []
