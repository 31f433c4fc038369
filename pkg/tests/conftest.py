from pathlib import Path

import networkx as nx
import pytest

from src.core.graph import Graph
from src.core.io import format_graph


def circulant_with(n: int, jumps: list[int], extra: list[tuple[int, int]]) -> nx.Graph:
    h = nx.circulant_graph(n, jumps)
    h.add_edges_from(extra)
    return h


@pytest.fixture
def triangle() -> Graph:
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3() -> Graph:
    return Graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def square() -> Graph:
    return Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def cube() -> Graph:
    return Graph.from_networkx(nx.hypercube_graph(3))


@pytest.fixture
def dominating_example() -> Graph:
    """K_{2,4} on 0..5 plus the apex 6 joined to everything"""
    edges = [(a, b) for a in (0, 1) for b in (2, 3, 4, 5)]
    edges += [(v, 6) for v in range(6)]
    return Graph(7, edges)


@pytest.fixture
def one_even_graph() -> Graph:
    """Order 11, 4-connected, only vertex 10 even and not adjacent to 0, 2, 5, 7"""
    h = circulant_with(10, [1, 2], [(0, 5), (2, 7)])
    h.add_edges_from((10, v) for v in (1, 3, 4, 6, 8, 9))
    return Graph.from_networkx(h)


@pytest.fixture
def bridge_graph() -> Graph:
    """Order 11, 4-connected, only vertex 10 even, neighbors 3, 4, 8, 9"""
    h = circulant_with(10, [1, 2], [(0, 5), (1, 6), (2, 7)])
    h.add_edges_from((10, v) for v in (3, 4, 8, 9))
    return Graph.from_networkx(h)


def square_with_hub(extra: list[tuple[int, int]]) -> Graph:
    """Order 13: the square 0-1-2-3, vertices 4, 5, 6 wired to it by `extra`,
    4, 5, 6 joined to the hub 7, and 0..3 matched to 8..11. The hub 7 and
    vertex 12 over the 4-cycle 8-9-10-11 form an octahedron. Vertex 12 is
    the only even vertex."""
    edges = [(0, 1), (1, 2), (2, 3), (0, 3), *extra]
    edges += [(0, 8), (1, 9), (2, 10), (3, 11), (4, 7), (5, 7), (6, 7)]
    edges += [(8, 9), (9, 10), (10, 11), (8, 11)]
    edges += [(hub, v) for hub in (7, 12) for v in (8, 9, 10, 11)]
    return Graph(13, edges)


@pytest.fixture
def odd_second_cycle_graph() -> Graph:
    """With the square as cycle, 4 and 5 close a triangle at 0"""
    return square_with_hub([(0, 4), (0, 5), (4, 5), (4, 6), (2, 4), (1, 5), (3, 5), (1, 6), (2, 6), (3, 6)])


@pytest.fixture
def even_second_cycle_graph() -> Graph:
    """With the square as cycle, 5 and 6 close the square 0-5-4-6"""
    return square_with_hub([(0, 5), (0, 6), (1, 4), (1, 5), (2, 5), (2, 6), (3, 4), (3, 6), (4, 5), (4, 6)])


@pytest.fixture
def write_graph(tmp_path: Path):
    def write(g: Graph, name: str = "graph.txt") -> Path:
        path = tmp_path / name
        path.write_text(format_graph(g))
        return path
    return write
