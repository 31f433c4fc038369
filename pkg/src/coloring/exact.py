from dataclasses import dataclass

from loguru import logger

from src.coloring.coloring import EdgeColoring
from src.config import DEFAULT_EXACT_BUDGET
from src.core.graph import Edge, Graph
from src.errors import PreconditionError, SearchBudgetExceeded

EXACT_PROVENANCE = "exact-search"


@dataclass(frozen=True)
class ExactResult:
    # None when no coloring with at most k_max colors exists
    k: int | None
    witness: EdgeColoring | None
    k_max: int
    nodes: int

    def describe(self) -> str:
        return f"chi_odd = {self.k}" if self.k is not None else f"chi_odd > {self.k_max}"


class _OddColoringSearch:
    """
    Backtracking over the sorted edge list with classes opened in first-use
    order. A vertex fails once all its edges are colored and some class degree
    is even and positive, or earlier when it has more even positive class
    degrees than uncolored edges left.
    """

    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.edges: list[Edge] = list(g.edge_list)
        self.budget = budget
        self.nodes = 0

    def run(self, k: int) -> dict[Edge, int] | None:
        n = self.g.vertex_count
        self.k = k
        self.colors = [0] * len(self.edges)
        self.remaining = [self.g.degree(v) for v in range(n)]
        self.class_degree = [[0] * (k + 1) for _ in range(n)]
        if self._assign(0, 0):
            return dict(zip(self.edges, self.colors))
        return None

    def _violates(self, x: int) -> bool:
        even_positive = sum(1 for d in self.class_degree[x] if d and d % 2 == 0)
        return even_positive > self.remaining[x]

    def _assign(self, i: int, used: int) -> bool:
        if i == len(self.edges):
            return True
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"exact search exceeded {self.budget} nodes")
        u, v = self.edges[i]
        for c in range(1, min(used + 1, self.k) + 1):
            self.colors[i] = c
            for x in (u, v):
                self.class_degree[x][c] += 1
                self.remaining[x] -= 1
            if not (self._violates(u) or self._violates(v)) and self._assign(i + 1, max(used, c)):
                return True
            for x in (u, v):
                self.class_degree[x][c] -= 1
                self.remaining[x] += 1
        self.colors[i] = 0
        return False


def exact_odd_chromatic_index(g: Graph, k_max: int = 4, budget: int = DEFAULT_EXACT_BUDGET) -> ExactResult:
    """Smallest k <= k_max admitting an odd k-edge-coloring, with a witness

    Args:
        g (Graph): Any simple graph; edgeless graphs report k = 0
        k_max (int, optional): Largest k tried. Defaults to 4.
        budget (int, optional): Search nodes allowed over all k. Defaults to DEFAULT_EXACT_BUDGET.

    Raises:
        SearchBudgetExceeded: Budget ran out before the answer was settled

    Returns:
        ExactResult: k (None when above k_max) and witness coloring
    """
    if k_max < 1:
        raise PreconditionError(f"k_max must be positive, got {k_max}")
    if g.edge_count == 0:
        return ExactResult(0, EdgeColoring(g, {}, EXACT_PROVENANCE), k_max, 0)

    search = _OddColoringSearch(g, budget)
    for k in range(1, k_max + 1):
        assignment = search.run(k)
        logger.debug("Exact search k={}: {} after {} nodes", k, "found" if assignment else "none", search.nodes)
        if assignment is not None:
            return ExactResult(k, EdgeColoring(g, assignment, EXACT_PROVENANCE), k_max, search.nodes)
    return ExactResult(None, None, k_max, search.nodes)
