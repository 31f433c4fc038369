from dataclasses import dataclass
from enum import Enum
from typing import Callable

from loguru import logger

from src.coloring.coloring import EdgeColoring
from src.coloring.exact import exact_odd_chromatic_index
from src.coloring.four_connected import odd3_four_connected
from src.coloring.constructions import (
    eulerian_edge_removal,
    odd3_dominating_even,
    odd3_two_even,
    odd_color_even_order,
)
from src.coloring.tree import odd_color_tree
from src.config import SolverConfig
from src.core.connectivity import is_k_connected
from src.core.graph import Edge, Graph, is_connected
from src.errors import PreconditionError, W4Exception
from src.structures.paths import SearchBudget


class Method(str, Enum):
    """Coloring procedures selectable from the command line"""
    Auto = "auto"
    Tree = "tree"
    EvenOrder = "even-order"
    TwoEven = "two-even"
    Dominating = "dominating"
    FourConnected = "four-connected"
    EulerianRemove = "eulerian-remove"


@dataclass(frozen=True)
class ColoringOutcome:
    coloring: EdgeColoring
    # set only by edge removal; the coloring is then of g minus this edge
    removed_edge: Edge | None = None


def _dominating_vertex(g: Graph) -> int | None:
    evens = g.even_vertices()
    if len(evens) == 1 and g.degree(evens[0]) == g.vertex_count - 1:
        return evens[0]
    return None


def color_auto(g: Graph, config: SolverConfig | None = None) -> EdgeColoring:
    """Route g to the most specific constructive procedure, exact search as the last resort"""
    config = config or SolverConfig()
    if not is_connected(g):
        raise PreconditionError("connected graph required")
    if g.edge_count == 0:
        raise PreconditionError("graph has no edges")

    budget = SearchBudget(config.search_budget)
    if g.is_forest():
        return odd_color_tree(g)
    if g.vertex_count % 2 == 0:
        return odd_color_even_order(g)
    if is_k_connected(g, 4):
        return odd3_four_connected(g, budget=budget, validate=False)
    if len(g.even_vertices()) >= 2 and is_k_connected(g, 3):
        return odd3_two_even(g, budget=budget, validate=False)
    w = _dominating_vertex(g)
    if w is not None and is_connected(g, without=[w]):
        try:
            return odd3_dominating_even(g, w)
        except W4Exception:
            logger.info("Graph is the wheel with four spokes")

    logger.info("No constructive hypothesis holds for {}, running exact search", g)
    result = exact_odd_chromatic_index(g, config.k_max, config.exact_budget)
    if result.witness is None:
        raise PreconditionError(f"no odd coloring with at most {config.k_max} colors")
    return result.witness


def _run(procedure: Callable[..., EdgeColoring]) -> Callable[[Graph, SolverConfig], ColoringOutcome]:
    def run(g: Graph, config: SolverConfig) -> ColoringOutcome:
        return ColoringOutcome(procedure(g, config))
    return run


def _remove_edge(g: Graph, config: SolverConfig) -> ColoringOutcome:
    edge, coloring = eulerian_edge_removal(g)
    return ColoringOutcome(coloring, edge)


# Registry of coloring methods
METHODS: dict[Method, Callable[[Graph, SolverConfig], ColoringOutcome]] = {
    Method.Auto: _run(color_auto),
    Method.Tree: _run(lambda g, config: odd_color_tree(g)),
    Method.EvenOrder: _run(lambda g, config: odd_color_even_order(g)),
    Method.TwoEven: _run(lambda g, config: odd3_two_even(g, budget=SearchBudget(config.search_budget))),
    Method.Dominating: _run(lambda g, config: odd3_dominating_even(g)),
    Method.FourConnected: _run(lambda g, config: odd3_four_connected(g, budget=SearchBudget(config.search_budget))),
    Method.EulerianRemove: _remove_edge,
}


def run_method(g: Graph, method: Method | str, config: SolverConfig | None = None) -> ColoringOutcome:
    return METHODS[Method(method)](g, config or SolverConfig())
