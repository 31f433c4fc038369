from loguru import logger

from src.coloring.coloring import EdgeColoring, assert_valid
from src.coloring.tree import odd_color_tree
from src.core.connectivity import is_k_connected
from src.core.graph import Edge, EdgeSubgraph, Graph, edge_key, is_connected, is_eulerian, spanning_tree
from src.errors import InternalFault, PreconditionError, W4Exception
from src.parity.subgraphs import (
    forest_split_decomposition,
    odd_factor,
    odd_factor_through_vertex,
    tree_t_join,
)
from src.structures.paths import (
    SearchBudget,
    eulerian_removable_pair,
    nonadjacent_removable_pair,
    shortest_even_endpoint_path,
)

EVEN_ORDER_PROVENANCE = "even-order"
EULERIAN_REMOVE_PROVENANCE = "eulerian-remove"
TWO_EVEN_PROVENANCE = "two-even-vertices"
DOMINATING_PROVENANCE = "dominating-even-vertex"
WHEEL_PROVENANCE = "dominating-even-vertex/wheel"


def odd_color_even_order(g: Graph) -> EdgeColoring:
    """At most three colors for a connected graph of even order

    An odd factor whose complement is a subforest of a spanning tree takes
    color 1; the forest is tree-colored with colors 2 and 3.
    """
    if g.vertex_count % 2:
        raise PreconditionError(f"even order required, got {g.vertex_count}")
    if not is_connected(g):
        raise PreconditionError("connected graph required")
    if g.edge_count == 0:
        raise PreconditionError("graph has no edges")

    tree = spanning_tree(g)
    start = tree.complement()
    degrees = start.degrees()
    s = {v for v in g.vertices() if degrees[v] % 2 == 0}
    factor = start.union(tree_t_join(tree, s))
    rest = factor.complement()
    forest_coloring = odd_color_tree(rest.spanning_graph())
    classes = [factor, *(EdgeSubgraph(g, c.edges) for c in forest_coloring.classes())]
    logger.debug("Even order coloring: factor of {} edges, forest of {} edges", len(factor), len(rest))
    return assert_valid(EdgeColoring.from_classes(g, classes, EVEN_ORDER_PROVENANCE))


def eulerian_edge_removal(g: Graph) -> tuple[Edge, EdgeColoring]:
    """An edge e = wu and an odd 2-edge-coloring of g - e, for Eulerian g of odd order

    Returns:
        tuple[Edge, EdgeColoring]: Removed edge and the coloring of g - e
    """
    if g.vertex_count % 2 == 0:
        raise PreconditionError(f"odd order required, got {g.vertex_count}")
    if not is_eulerian(g):
        raise PreconditionError("connected Eulerian graph required")

    w, u = eulerian_removable_pair(g)
    rest, vmap = g.delete_vertices([w])
    factor = vmap.lift_edges(odd_factor_through_vertex(rest, vmap.to_new(u)).edges)
    e = edge_key(w, u)
    reduced = g.delete_edges([e])
    other = reduced.edges - factor
    logger.debug("Removing edge {} (w={}, u={})", e, w, u)
    coloring = EdgeColoring.from_classes(reduced, [factor, other], EULERIAN_REMOVE_PROVENANCE)
    return e, assert_valid(coloring)


def odd3_two_even(g: Graph, budget: SearchBudget | None = None, validate: bool = True) -> EdgeColoring:
    """Odd 3-edge-coloring of a 3-connected odd-order graph with two even vertices

    P = x0 ... xt joins even vertices w = x0 and u = xt through odd vertices.
    F is an odd factor of (G - E(P)) - w through u, G'' = G - E(P) - E(F) is
    split in two classes odd away from w, and the edges of P are dealt out:
    x0x1 to the class where w has even degree, then each next edge keeps the
    class while the current vertex still has G''-edges and switches otherwise.
    """
    if validate:
        if g.vertex_count % 2 == 0:
            raise PreconditionError(f"odd order required, got {g.vertex_count}")
        if not is_k_connected(g, 3):
            raise PreconditionError("3-connected graph required")
    path = shortest_even_endpoint_path(g, budget=budget, validate=False)
    x = path.vertices
    w, u = x[0], x[-1]
    path_edges = path.edge_list()

    without_path = g.delete_edges(path_edges)
    rest, vmap = without_path.delete_vertices([w])
    factor = EdgeSubgraph(g, vmap.lift_edges(odd_factor_through_vertex(rest, vmap.to_new(u)).edges))
    remainder = without_path.delete_edges(factor.edges)
    h1, h2 = forest_split_decomposition(remainder, w)
    classes = [set(h1.edges), set(h2.edges)]

    current = 0 if h1.degree(w) % 2 == 0 else 1
    classes[current].add(path_edges[0])
    for s in range(1, len(x) - 1):
        xs = x[s]
        if remainder.degree(xs) >= 1:
            d1, d2 = h1.degree(xs), h2.degree(xs)
            if not (d1 > 0 and d2 > 0 and d1 % 2 and d2 % 2):
                raise InternalFault(f"path vertex {xs} has class degrees {d1}, {d2}")
        else:
            current = 1 - current
        classes[current].add(path_edges[s])
    logger.debug("Two even vertices: path {}, factor of {} edges", x, len(factor))
    return assert_valid(EdgeColoring.from_classes(g, [factor, *classes], TWO_EVEN_PROVENANCE))


def _unique_even_vertex(g: Graph) -> int:
    evens = g.even_vertices()
    if len(evens) != 1:
        raise PreconditionError(f"exactly one vertex of even degree required, found {len(evens)}")
    return evens[0]


def rim_order(rim: Graph) -> list[int]:
    """Vertices of a cycle graph in walk order from its least vertex towards the smaller neighbor"""
    order = [0]
    previous, current = None, 0
    while True:
        nxt = next(y for y in rim.neighbors(current) if y != previous)
        if nxt == 0:
            return order
        order.append(nxt)
        previous, current = current, nxt


def wheel_coloring(g: Graph, w: int) -> EdgeColoring:
    """Three classes for a wheel with an even rim of at least six vertices

    On rim c0 ... c(m-1): c0 carries only color 1 and c3 only color 2, c1c2 and
    the rim edges c(i)c(i+1) for even i >= 4 take color 3, the remaining rim
    edges after c4 take color 1, and every spoke takes the color in {1, 2}
    its rim vertex misses.
    """
    rest, vmap = g.delete_vertices([w])
    c = vmap.lift_vertices(rim_order(rest))
    m = len(c)
    if m < 6 or m % 2:
        raise PreconditionError(f"wheel pattern needs an even rim of at least 6, got {m}")

    rim: dict[Edge, int] = {
        edge_key(c[m - 1], c[0]): 1,
        edge_key(c[0], c[1]): 1,
        edge_key(c[1], c[2]): 3,
        edge_key(c[2], c[3]): 2,
        edge_key(c[3], c[4]): 2,
    }
    for i in range(4, m - 1):
        rim[edge_key(c[i], c[i + 1])] = 3 if i % 2 == 0 else 1

    spokes = {0: 1, 3: 2}
    for i in range(m):
        if i in spokes:
            continue
        seen = {rim[edge_key(c[i], c[i - 1])], rim[edge_key(c[i], c[(i + 1) % m])]}
        spokes[i] = ({1, 2} - seen).pop()
    assignment = dict(rim)
    assignment.update({edge_key(w, c[i]): color for i, color in spokes.items()})
    return assert_valid(EdgeColoring(g, assignment, WHEEL_PROVENANCE))


def odd3_dominating_even(g: Graph, w: int | None = None) -> EdgeColoring:
    """Three colors when the only even vertex w sees every other vertex

    Raises:
        W4Exception: g is the wheel with four spokes
    """
    if g.vertex_count % 2 == 0:
        raise PreconditionError(f"odd order required, got {g.vertex_count}")
    if not is_connected(g):
        raise PreconditionError("connected graph required")
    unique = _unique_even_vertex(g)
    if w is None:
        w = unique
    elif w != unique:
        raise PreconditionError(f"vertex {w} is not the unique even vertex {unique}")
    if g.degree(w) != g.vertex_count - 1:
        raise PreconditionError(f"vertex {w} is not adjacent to all other vertices")
    if not is_connected(g, without=[w]):
        raise PreconditionError(f"graph minus {w} is disconnected")

    rest, vmap = g.delete_vertices([w])
    if rest.is_cycle():
        if g.vertex_count == 5:
            raise W4Exception()
        logger.debug("Graph minus {} is a cycle, using the wheel pattern", w)
        return wheel_coloring(g, w)

    x, y = (vmap.to_old(v) for v in nonadjacent_removable_pair(rest))
    core, core_map = g.delete_vertices([w, x, y])
    factor = core_map.lift_edges(odd_factor(core).edges)
    near_x = g.neighbor_set(x)
    h1 = set(g.incident_edges(x))
    h1 |= {edge_key(w, z) for z in g.vertices() if z not in near_x and z not in (w, y)}
    h2 = g.edges - factor - h1
    logger.debug("Dominating vertex {}: removable pair ({}, {})", w, x, y)
    return assert_valid(EdgeColoring.from_classes(g, [factor, h1, h2], DOMINATING_PROVENANCE))
