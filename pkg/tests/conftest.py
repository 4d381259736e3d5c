import numpy as np
import pytest

from swiftwalk.graph import build_graph, cone, cycle, petersen, wheel


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def petersen_graph():
    return petersen()


@pytest.fixture
def petersen_cone():
    return cone(petersen())


@pytest.fixture
def wheel6():
    return wheel(6)


@pytest.fixture
def wheel6_with_pendant_pair():
    """wheel(6) plus vertex 7 joined to rim vertices 1 and 2: two common neighbours with the apex."""
    g = wheel(6)
    return build_graph(8, list(g.edges) + [(1, 7), (2, 7)])


@pytest.fixture
def c12():
    return cycle(12)
