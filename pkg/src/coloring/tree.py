from collections import deque

from loguru import logger

from src.coloring.coloring import EdgeColoring
from src.core.graph import Edge, Graph, edge_key
from src.errors import PreconditionError

TREE_PROVENANCE = "tree"


def odd_color_tree(t: Graph) -> EdgeColoring:
    """Odd 2-edge-coloring of a forest

    Each component is rooted at its lowest leaf whose edge gets color 1. Going
    down, a vertex whose parent edge has color c passes c to its child edges
    when it has an even number of children and the other color when odd, so
    both class degrees end up odd or zero.

    Args:
        t (Graph): Acyclic graph

    Raises:
        PreconditionError: t has a cycle

    Returns:
        EdgeColoring: Valid coloring with at most two colors
    """
    if not t.is_forest():
        raise PreconditionError("tree coloring needs an acyclic graph")

    assignment: dict[Edge, int] = {}
    for component in t.components():
        if len(component) < 2:
            continue
        root = next(v for v in component if t.degree(v) == 1)
        child = t.neighbors(root)[0]
        assignment[edge_key(root, child)] = 1
        queue = deque([(child, root, 1)])
        while queue:
            x, parent, color = queue.popleft()
            children = [y for y in t.neighbors(x) if y != parent]
            down = color if len(children) % 2 == 0 else 3 - color
            for y in children:
                assignment[edge_key(x, y)] = down
                queue.append((y, x, down))

    coloring = EdgeColoring(t, assignment, TREE_PROVENANCE)
    logger.trace("Tree coloring of {} uses {} colors", t, coloring.k)
    return coloring
