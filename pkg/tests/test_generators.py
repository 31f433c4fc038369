import networkx as nx
import pytest

from src.core.connectivity import is_k_connected
from src.core.graph import Graph, is_connected, is_eulerian
from src.errors import FixtureBudgetExceeded, PreconditionError
from src.generators.families import (
    circulant,
    four_chromatic_premise_violations,
    star_obstruction_graph,
    subdivided_cubic_graph,
    wheel,
)
from src.generators import fixtures
from src.generators.fixtures import Profile, random_fixture


def test_wheel():
    g = wheel(6)
    assert g.vertex_count == 7 and g.edge_count == 12
    assert g.degree(0) == 6
    with pytest.raises(PreconditionError):
        wheel(2)


def test_circulant():
    g = circulant(10, [1, 2])
    assert g.edge_count == 20
    assert all(g.degree(v) == 4 for v in g.vertices())


def test_subdivided_k33():
    g = subdivided_cubic_graph("k33")
    assert g.vertex_count == 7 and g.edge_count == 11
    assert g.degree(6) == 4
    assert four_chromatic_premise_violations(g, 6) == []


@pytest.mark.parametrize("base, order", [("cube", 9), ("heawood", 15)])
def test_subdivided_bases(base, order):
    g = subdivided_cubic_graph(base)
    assert g.vertex_count == order
    assert four_chromatic_premise_violations(g, order - 1) == []


def test_subdivided_with_explicit_edges():
    g = subdivided_cubic_graph("k33", (0, 3), (1, 4))
    assert set(g.neighbors(6)) == {0, 1, 3, 4}


@pytest.mark.parametrize(
    "e1, e2",
    [((0, 3), (0, 4)), ((0, 1), (1, 4)), ((0, 3), (0, 3))],
)
def test_subdivided_rejects_bad_edges(e1, e2):
    with pytest.raises(PreconditionError):
        subdivided_cubic_graph("k33", e1, e2)


def test_subdivided_rejects_bad_bases():
    with pytest.raises(PreconditionError):
        subdivided_cubic_graph("petersen")
    with pytest.raises(PreconditionError):
        subdivided_cubic_graph(Graph.from_networkx(nx.petersen_graph()))


def test_premise_violations_of_a_wheel():
    problems = four_chromatic_premise_violations(wheel(6), 0)
    assert "vertex 0 has degree 6, expected 4" in problems


def test_star_obstruction_graph():
    g = star_obstruction_graph()
    assert g.vertex_count == 27
    w, x1, x2 = 26, 24, 25
    assert g.degree(w) == 24
    assert g.degree(x1) == 5 and g.degree(x2) == 5
    assert g.even_vertices() == (w,)
    assert is_k_connected(g, 3)
    assert min(g.degree(v) for v in g.vertices()) >= 4


def test_star_obstruction_rejects_bad_base():
    with pytest.raises(PreconditionError):
        star_obstruction_graph(Graph.from_networkx(nx.complete_graph(4)))


@pytest.mark.parametrize("seed", range(5))
def test_profiles(seed):
    tree = random_fixture(Profile.Tree, seed)
    assert tree.is_forest() and is_connected(tree)

    even = random_fixture("connected-even-order", seed)
    assert even.vertex_count % 2 == 0 and is_connected(even)

    eulerian = random_fixture("eulerian-odd-order", seed)
    assert eulerian.vertex_count % 2 == 1 and is_eulerian(eulerian)

    two_even = random_fixture("3conn-two-even", seed)
    assert len(two_even.even_vertices()) >= 2 and is_k_connected(two_even, 3)

    four = random_fixture("4conn-odd-order", seed)
    assert four.vertex_count % 2 == 1 and is_k_connected(four, 4)

    one_even = random_fixture("4conn-one-even", seed)
    (w,) = one_even.even_vertices()
    assert one_even.degree(w) < one_even.vertex_count - 1
    assert is_k_connected(one_even, 4)


def test_same_seed_same_graph():
    assert random_fixture("4conn-odd-order", 7) == random_fixture("4conn-odd-order", 7)


def test_fixture_budget(monkeypatch):
    monkeypatch.setitem(fixtures.SAMPLERS, Profile.FourConnOneEven, lambda rng: None)
    with pytest.raises(FixtureBudgetExceeded):
        random_fixture("4conn-one-even", 0, attempts=3)
