from typing import Iterable

from loguru import logger

from src.coloring.coloring import EdgeColoring, assert_valid
from src.coloring.star_parity import star_parity_subgraphs
from src.coloring.constructions import odd3_dominating_even, odd3_two_even
from src.core.connectivity import is_k_connected
from src.core.graph import EdgeSubgraph, Graph
from src.errors import InternalFault, PreconditionError
from src.parity.subgraphs import odd_factor
from src.structures.paths import SearchBudget

STAR_PARITY_PROVENANCE = "star-parity"


def odd3_four_connected(
    g: Graph,
    budget: SearchBudget | None = None,
    validate: bool = True,
    cycle: Iterable[int] | None = None,
) -> EdgeColoring:
    """Odd 3-edge-coloring of a 4-connected graph of odd order

    Two even vertices go to the path construction, a single even vertex seeing
    everything to the dominating vertex construction. Otherwise the odd one of
    the star parity subgraphs F together with the edges at w forms a connected
    Eulerian subgraph of even order; one of its odd factors and the rest of it
    are two classes, and everything outside is the third. A given cycle is
    handed to the star parity construction in place of the searched one.
    """
    if g.vertex_count % 2 == 0:
        raise PreconditionError(f"odd order required, got {g.vertex_count}")
    if validate and not is_k_connected(g, 4):
        raise PreconditionError("4-connected graph required")

    evens = g.even_vertices()
    if len(evens) >= 2:
        return odd3_two_even(g, budget=budget, validate=False)
    w = evens[0]
    if g.degree(w) == g.vertex_count - 1:
        return odd3_dominating_even(g, w)

    result = star_parity_subgraphs(g, w, cycle=cycle, budget=budget, validate=False)
    closed = result.odd_part().union(g.incident_edges(w))
    dense, vmap = closed.to_graph()
    if dense.vertex_count % 2 or not all(dense.degree(v) % 2 == 0 for v in dense.vertices()):
        raise InternalFault("star subgraph plus the edges at w is not Eulerian of even order")
    h1 = EdgeSubgraph(g, vmap.lift_edges(odd_factor(dense).edges))
    provenance = f"{STAR_PARITY_PROVENANCE}/{result.case}"
    logger.debug("Four-connected coloring via {}", provenance)
    return assert_valid(EdgeColoring.from_classes(g, [h1, closed.difference(h1), closed.complement()], provenance))
