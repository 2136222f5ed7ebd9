"""
Pytest fixtures for testing.
"""
import os
from typing import Callable, List, Tuple

import numpy as np
import pytest

# Set environment to testing
os.environ["NETPRUNE_ENV"] = "testing"

# Import after setting env
from src.models.graph import Graph


def make_graph(n: int, pairs: List[Tuple[int, int]], name: str = "") -> Graph:
    """Graph on nodes "0".."n-1" from integer index pairs."""
    ids = [str(i) for i in range(n)]
    return Graph.from_id_pairs(ids, [(str(a), str(b)) for a, b in pairs], name=name)


def random_graph(n: int, p: float, seed: int, name: str = "") -> Graph:
    """Seeded G(n, p) graph; isolates kept."""
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    pairs = [(int(i), int(j)) for i, j in zip(*np.nonzero(upper))]
    return make_graph(n, pairs, name or f"gnp-{n}-{seed}")


@pytest.fixture
def k2() -> Graph:
    """Single edge."""
    return make_graph(2, [(0, 1)], "K2")


@pytest.fixture
def p3() -> Graph:
    """Path on three nodes."""
    return make_graph(3, [(0, 1), (1, 2)], "P3")


@pytest.fixture
def k3() -> Graph:
    """Triangle."""
    return make_graph(3, [(0, 1), (0, 2), (1, 2)], "K3")


@pytest.fixture
def star() -> Graph:
    """Star K1,4 with centre "0"."""
    return make_graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)], "K1,4")


@pytest.fixture
def k2_isolate() -> Graph:
    """An edge plus an isolated node."""
    return make_graph(3, [(0, 1)], "K2+K1")


@pytest.fixture
def er_graph() -> Graph:
    """Erdos-Renyi style graph, n=100, about 250 edges."""
    return random_graph(100, 0.05, seed=20190501, name="ER")


@pytest.fixture
def graph_factory() -> Callable[..., Graph]:
    """Seeded random graph builder."""
    return random_graph


@pytest.fixture
def write_file(tmp_path) -> Callable[[str, str], str]:
    """Write text to a file under the test's tmp dir and return its path."""

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write


@pytest.fixture
def data_dir() -> str:
    """Directory holding the public criminal-network files, skipped when absent."""
    path = os.environ.get("NETPRUNE_DATA_DIR")
    if not path or not os.path.isdir(path):
        pytest.skip("NETPRUNE_DATA_DIR not set; dataset tests skipped")
    return path
