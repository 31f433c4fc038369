import networkx as nx
import pytest
from hypothesis import given, settings

from src.coloring.coloring import verify_coloring
from src.coloring.exact import exact_odd_chromatic_index
from src.core.graph import Graph
from src.errors import PreconditionError, SearchBudgetExceeded
from src.generators.families import subdivided_cubic_graph, wheel
from tests.strategies import connected_graphs


@pytest.mark.parametrize(
    "g, expected",
    [
        (Graph(2, [(0, 1)]), 1),
        (Graph.from_networkx(nx.complete_graph(4)), 1),
        (Graph(3, [(0, 1), (1, 2)]), 2),
        (Graph.from_networkx(nx.cycle_graph(4)), 2),
        (Graph.from_networkx(nx.cycle_graph(3)), 3),
        (Graph.from_networkx(nx.cycle_graph(5)), 3),
        (Graph.from_networkx(nx.complete_graph(5)), 3),
        (wheel(4), 4),
    ],
)
def test_known_values(g, expected):
    result = exact_odd_chromatic_index(g)
    assert result.k == expected
    assert result.witness.k == expected
    assert verify_coloring(g, result.witness)
    assert result.describe() == f"chi_odd = {expected}"


@pytest.mark.parametrize("base", ["k33", "cube"])
def test_subdivided_cubic_graphs_need_four(base):
    g = subdivided_cubic_graph(base)
    assert exact_odd_chromatic_index(g).k == 4


def test_above_k_max():
    result = exact_odd_chromatic_index(wheel(4), k_max=3)
    assert result.k is None and result.witness is None
    assert result.describe() == "chi_odd > 3"


def test_edgeless_graph():
    result = exact_odd_chromatic_index(Graph(3))
    assert result.k == 0
    assert result.describe() == "chi_odd = 0"


def test_budget():
    with pytest.raises(SearchBudgetExceeded):
        exact_odd_chromatic_index(wheel(4), budget=5)
    with pytest.raises(PreconditionError):
        exact_odd_chromatic_index(wheel(4), k_max=0)


@settings(max_examples=100, deadline=None)
@given(connected_graphs(min_vertices=4, max_vertices=8, max_edges=16))
def test_connected_graphs_need_at_most_four(g: Graph):
    result = exact_odd_chromatic_index(g)
    assert result.k is not None and result.k <= 4
    assert verify_coloring(g, result.witness)
    if g.vertex_count % 2 == 0:
        assert result.k <= 3


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_vertices=6))
def test_invariant_under_relabelling(g: Graph):
    reversed_graph = Graph(g.vertex_count, [(g.vertex_count - 1 - u, g.vertex_count - 1 - v) for u, v in g.edge_list])
    assert exact_odd_chromatic_index(g).k == exact_odd_chromatic_index(reversed_graph).k


@settings(max_examples=30, deadline=None)
@given(connected_graphs(max_vertices=6))
def test_monotone_in_k_max(g: Graph):
    chi = exact_odd_chromatic_index(g).k
    for k_max in range(1, 5):
        result = exact_odd_chromatic_index(g, k_max=k_max)
        assert result.k == (chi if chi <= k_max else None)
