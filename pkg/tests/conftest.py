import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eglocal import Graph

# Shared fixtures: PAW, CHAIN33, DIAMOND, STAR3, C4, K3, K4, P4.


@pytest.fixture
def paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def chain33() -> Graph:
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])


@pytest.fixture
def diamond() -> Graph:
    """K4 minus the edge 2-3."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture
def star3() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def c4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def k3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def k4() -> Graph:
    return Graph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


@pytest.fixture
def p4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
