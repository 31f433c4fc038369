from itertools import chain, combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.core.graph import EdgeSubgraph, Graph, is_connected, spanning_tree
from src.errors import PreconditionError
from src.generators.fixtures import random_fixture
from src.parity.subgraphs import (
    forest_split_decomposition,
    odd_factor,
    odd_factor_through_vertex,
    spanning_parity_subgraph,
    tree_t_join,
)
from tests.strategies import connected_graphs, trees


@given(trees(), st.data())
def test_tree_t_join_is_odd_exactly_on_s(t: Graph, data):
    vertices = list(t.vertices())
    s = set(data.draw(st.lists(st.sampled_from(vertices), unique=True)))
    if len(s) % 2:
        s.pop()
    join = tree_t_join(spanning_tree(t), s)
    assert join.odd_vertices() == s
    assert join.is_acyclic()


def even_subsets(vertices: list[int]):
    return chain.from_iterable(combinations(vertices, size) for size in range(0, len(vertices) + 1, 2))


@pytest.mark.parametrize("order", range(2, 9))
def test_tree_t_join_on_every_small_tree(order):
    for tree in nx.nonisomorphic_trees(order):
        t = Graph.from_networkx(tree)
        base = spanning_tree(t)
        for s in even_subsets(list(t.vertices())):
            join = tree_t_join(base, set(s))
            assert join.odd_vertices() == set(s)
            # an edge is in the join iff it splits s into odd halves
            for u, v in t.edge_list:
                side = nx.node_connected_component(nx.restricted_view(tree, [], [(u, v)]), u)
                assert ((u, v) in join.edges) == (len(side & set(s)) % 2 == 1)


def test_tree_t_join_on_a_path(path3):
    tree = spanning_tree(path3)
    assert tree_t_join(tree, {0, 2}).edges == {(0, 1), (1, 2)}
    assert tree_t_join(tree, {0, 1}).edges == {(0, 1)}
    assert tree_t_join(tree, set()).edges == set()


def test_tree_t_join_rejects_bad_input(path3, triangle):
    with pytest.raises(PreconditionError):
        tree_t_join(spanning_tree(path3), {0})
    with pytest.raises(PreconditionError):
        tree_t_join(EdgeSubgraph.of(triangle, triangle.edge_list), {0, 1})
    forest = EdgeSubgraph.of(Graph(4, [(0, 1), (2, 3)]), [(0, 1), (2, 3)])
    with pytest.raises(PreconditionError):
        tree_t_join(forest, {0, 2})


@given(connected_graphs(), st.data())
def test_spanning_parity_subgraph(g: Graph, data):
    s = set(data.draw(st.lists(st.sampled_from(list(g.vertices())), unique=True)))
    if len(s) % 2:
        s.pop()
    sub = spanning_parity_subgraph(g, s)
    assert sub.odd_vertices() == s
    for comp in sub.components():
        assert comp.vertices & s


@given(connected_graphs())
def test_odd_factor_on_even_order(g: Graph):
    if g.vertex_count % 2:
        with pytest.raises(PreconditionError):
            odd_factor(g)
        return
    factor = odd_factor(g)
    assert factor.odd_vertices() == set(g.vertices())


def test_odd_factor_through_vertex_of_k4():
    k4 = Graph.from_networkx(nx.complete_graph(4))
    assert odd_factor_through_vertex(k4, 0).edges == k4.edges


def test_odd_factor_through_vertex_contract():
    checked = 0
    for seed in range(100):
        g = random_fixture("connected-even-order", seed)
        for w in g.vertices():
            if g.degree(w) % 2 == 0 or not is_connected(g, without=[w]):
                continue
            factor = odd_factor_through_vertex(g, w)
            assert factor.odd_vertices() == set(g.vertices())
            assert set(g.incident_edges(w)) <= factor.edges
            assert factor.complement().is_acyclic()
            checked += 1
    assert checked >= 100


def test_odd_factor_through_vertex_preconditions(square):
    with pytest.raises(PreconditionError):
        odd_factor_through_vertex(square, 0)
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    with pytest.raises(PreconditionError):
        odd_factor_through_vertex(star, 0)


def test_forest_split_of_a_wheel_like_graph():
    # 0 joined to every vertex of the path 1-2-3-4
    g = Graph(5, [(1, 2), (2, 3), (3, 4), (0, 1), (0, 2), (0, 3), (0, 4)])
    h1, h2 = forest_split_decomposition(g, 0)
    assert not h1.edges & h2.edges
    assert h1.edges | h2.edges == g.edges
    for part in (h1, h2):
        assert all(d % 2 for x, d in part.degrees().items() if x != 0)


def test_forest_split_needs_a_forest(square):
    with pytest.raises(PreconditionError):
        forest_split_decomposition(Graph(5, [*square.edge_list, (0, 4)]), 4)
