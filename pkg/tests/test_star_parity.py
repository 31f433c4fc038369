import pytest

from src.coloring.coloring import verify_coloring
from src.coloring.exact import exact_odd_chromatic_index
from src.coloring.four_connected import odd3_four_connected
from src.coloring.star_parity import StarParityResult, star_parity_subgraphs, star_parity_violations
from src.core.graph import EdgeSubgraph, Graph
from src.errors import PreconditionError
from src.generators.families import circulant, complete, star_obstruction_graph, wheel
from src.generators.fixtures import random_fixture

W = 10


def check_pair(g: Graph, result: StarParityResult, w: int = W):
    assert star_parity_violations(g, w, result.first) == []
    assert star_parity_violations(g, w, result.second) == []
    assert len(result.first.vertices) % 2 != len(result.second.vertices) % 2
    assert len(result.odd_part().vertices) % 2 == 1


def test_contract_checker(one_even_graph):
    empty = EdgeSubgraph(one_even_graph, frozenset())
    assert "misses neighbors [1, 3, 4, 6, 8, 9]" in star_parity_violations(one_even_graph, W, empty)
    star = EdgeSubgraph.of(one_even_graph, one_even_graph.incident_edges(W))
    assert any("uses an edge" in p for p in star_parity_violations(one_even_graph, W, star))
    stray = EdgeSubgraph.of(one_even_graph, [(0, 2)])
    problems = star_parity_violations(one_even_graph, W, stray)
    assert "component at 0 has no neighbor of 10" in problems
    assert "vertex 0 has degree 1" in problems


def test_default_cycle(one_even_graph):
    result = star_parity_subgraphs(one_even_graph)
    check_pair(one_even_graph, result)
    assert result.case == "case-2"
    assert W not in result.cycle.vertex_set
    assert result.cycle.is_chordless()


@pytest.mark.parametrize(
    "cycle, case",
    [
        ((0, 1, 2), "case-1"),
        ((0, 8, 9), "case-3"),
        ((0, 1, 3, 5), "case-4"),
    ],
)
def test_cycle_override_selects_case(one_even_graph, cycle, case):
    result = star_parity_subgraphs(one_even_graph, W, cycle=cycle)
    check_pair(one_even_graph, result)
    assert result.case == case


def test_case_4_without_neighbors_on_the_cycle(one_even_graph):
    result = star_parity_subgraphs(one_even_graph, W, cycle=(0, 2, 7, 5))
    check_pair(one_even_graph, result)
    assert result.case == "case-4-empty"


def test_bridge_case(bridge_graph):
    result = star_parity_subgraphs(bridge_graph, W, cycle=(0, 1, 2))
    check_pair(bridge_graph, result)
    assert result.case == "case-3-bridge"


def test_cycle_override_is_checked(one_even_graph):
    with pytest.raises(PreconditionError):
        star_parity_subgraphs(one_even_graph, W, cycle=(0, 1, 3))
    with pytest.raises(PreconditionError):
        star_parity_subgraphs(one_even_graph, W, cycle=(1, 3, 10))
    with pytest.raises(PreconditionError):
        star_parity_subgraphs(one_even_graph, W, cycle=(1, 3, 4, 6, 8, 9))


def test_preconditions(one_even_graph):
    with pytest.raises(PreconditionError):
        star_parity_subgraphs(one_even_graph, 0)
    with pytest.raises(PreconditionError):
        star_parity_subgraphs(wheel(6))
    with pytest.raises(PreconditionError):
        star_parity_subgraphs(complete(5))


def test_star_obstruction_is_not_four_connected():
    g = star_obstruction_graph()
    assert g.vertex_count == 27
    assert g.even_vertices() == (26,)
    with pytest.raises(PreconditionError):
        star_parity_subgraphs(g)


@pytest.mark.parametrize("seed", range(6))
def test_one_even_fixtures(seed):
    g = random_fixture("4conn-one-even", seed)
    (w,) = g.even_vertices()
    check_pair(g, star_parity_subgraphs(g), w)


def test_four_connected_through_star_parity(one_even_graph):
    col = odd3_four_connected(one_even_graph)
    assert verify_coloring(one_even_graph, col)
    assert col.k <= 3
    assert col.provenance == "star-parity/case-2"


def test_four_connected_dispatch():
    k5 = complete(5)
    col = odd3_four_connected(k5)
    assert verify_coloring(k5, col) and col.k == 3
    assert col.provenance == "two-even-vertices"

    k7 = complete(7)
    assert verify_coloring(k7, odd3_four_connected(k7))

    with pytest.raises(PreconditionError):
        odd3_four_connected(wheel(6))
    with pytest.raises(PreconditionError):
        odd3_four_connected(complete(6))


@pytest.mark.parametrize("profile", ["4conn-odd-order", "4conn-one-even"])
@pytest.mark.parametrize("seed", range(5))
def test_four_connected_fixtures(profile, seed):
    g = random_fixture(profile, seed)
    col = odd3_four_connected(g)
    assert verify_coloring(g, col)
    assert col.k <= 3


SQUARE = (0, 1, 2, 3)


@pytest.mark.parametrize(
    "graph, case",
    [
        ("odd_second_cycle_graph", "case-4-second-cycle-odd"),
        ("even_second_cycle_graph", "case-4-second-cycle-even"),
    ],
)
def test_case_4_second_cycle(request, graph, case):
    g = request.getfixturevalue(graph)
    assert g.even_vertices() == (12,)
    result = star_parity_subgraphs(g, 12, cycle=SQUARE)
    check_pair(g, result, 12)
    assert result.case == case
    assert result.cycle.vertices == SQUARE


@pytest.mark.parametrize(
    "graph, cycle, case",
    [
        ("one_even_graph", None, "case-2"),
        ("one_even_graph", (0, 1, 2), "case-1"),
        ("one_even_graph", (0, 8, 9), "case-3"),
        ("one_even_graph", (0, 1, 3, 5), "case-4"),
        ("one_even_graph", (0, 2, 7, 5), "case-4-empty"),
        ("bridge_graph", (0, 1, 2), "case-3-bridge"),
        ("odd_second_cycle_graph", SQUARE, "case-4-second-cycle-odd"),
        ("even_second_cycle_graph", SQUARE, "case-4-second-cycle-even"),
    ],
)
def test_every_case_colors_the_graph(request, graph, cycle, case):
    g = request.getfixturevalue(graph)
    col = odd3_four_connected(g, cycle=cycle)
    assert verify_coloring(g, col)
    assert col.k <= 3
    assert col.provenance == f"star-parity/{case}"


# Exact search stays fast up to this many edges on 9 vertices
EXACT_EDGE_LIMIT = 21

CORPUS = (
    [("complete", n) for n in (5, 7, 9)]
    + [("circulant", (n, j)) for n in (7, 9, 11, 13) for j in range(2, (n + 1) // 2)]
    + [(profile, seed) for profile in ("4conn-odd-order", "4conn-one-even") for seed in range(10)]
)


def corpus_graph(kind: str, arg) -> Graph:
    match kind:
        case "complete":
            return complete(arg)
        case "circulant":
            n, j = arg
            return circulant(n, [1, j])
        case _:
            return random_fixture(kind, arg)


@pytest.mark.parametrize("kind, arg", CORPUS)
def test_four_connected_corpus(kind, arg):
    g = corpus_graph(kind, arg)
    col = odd3_four_connected(g)
    assert verify_coloring(g, col)
    assert col.k <= 3
    if len(g.even_vertices()) == 1 and g.degree(g.even_vertices()[0]) < g.vertex_count - 1:
        assert col.provenance.startswith("star-parity/case-")
    if g.vertex_count <= 9 and g.edge_count <= EXACT_EDGE_LIMIT:
        exact = exact_odd_chromatic_index(g, k_max=3)
        assert exact.k is not None
        assert exact.k <= col.k
