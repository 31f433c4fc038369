from itertools import combinations
from typing import Callable, Sequence

import networkx as nx
from loguru import logger

from src.core.connectivity import is_k_connected
from src.core.graph import Edge, Graph, edge_key, is_eulerian
from src.errors import InternalFault, PreconditionError

# Cubic bipartite 3-connected bases of the four-chromatic family
CUBIC_BASES: dict[str, Callable[[], nx.Graph]] = {
    "k33": lambda: nx.complete_bipartite_graph(3, 3),
    "cube": lambda: nx.hypercube_graph(3),
    "heawood": nx.heawood_graph,
}


def wheel(n: int) -> Graph:
    """Rim of n vertices 1..n around the center 0"""
    if n < 3:
        raise PreconditionError(f"a wheel needs at least 3 rim vertices, got {n}")
    return Graph.from_networkx(nx.wheel_graph(n + 1))


def circulant(n: int, jumps: Sequence[int]) -> Graph:
    return Graph.from_networkx(nx.circulant_graph(n, list(jumps)))


def complete(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def four_chromatic_premise_violations(g: Graph, w: int) -> list[str]:
    """Conditions of the 3-connected family with odd chromatic index 4 that g fails

    w must have degree 4 and every other vertex degree 3, g - w must be
    bipartite with w joined to each side by exactly two edges, and g must be
    3-connected.
    """
    problems = []
    if g.degree(w) != 4:
        problems.append(f"vertex {w} has degree {g.degree(w)}, expected 4")
    cubic = [v for v in g.vertices() if v != w and g.degree(v) != 3]
    if cubic:
        problems.append(f"vertices {cubic} do not have degree 3")
    rest, vmap = g.delete_vertices([w])
    nx_rest = rest.to_networkx()
    if not nx.is_connected(nx_rest) or not nx.is_bipartite(nx_rest):
        problems.append(f"graph minus {w} is not a connected bipartite graph")
    else:
        side, _ = nx.bipartite.sets(nx_rest)
        side = {vmap.to_old(v) for v in side}
        into_side = sum(1 for x in g.neighbors(w) if x in side)
        if into_side != 2 or g.degree(w) - into_side != 2:
            problems.append(f"vertex {w} sends {into_side} and {g.degree(w) - into_side} edges to the two sides")
    if not is_k_connected(g, 3):
        problems.append("graph is not 3-connected")
    return problems


def _check_cubic_base(base: Graph) -> None:
    if any(base.degree(v) != 3 for v in base.vertices()):
        raise PreconditionError("base graph is not cubic")
    if not nx.is_bipartite(base.to_networkx()):
        raise PreconditionError("base graph is not bipartite")
    if not is_k_connected(base, 3):
        raise PreconditionError("base graph is not 3-connected")


def _subdivide_and_identify(base: Graph, e1: Edge, e2: Edge) -> Graph:
    w = base.vertex_count
    edges = [e for e in base.edge_list if e not in (e1, e2)]
    edges.extend((x, w) for x in (*e1, *e2))
    return Graph(w + 1, edges)


def subdivided_cubic_graph(base: Graph | str, e1: Edge | None = None, e2: Edge | None = None) -> Graph:
    """Subdivide two disjoint edges of a cubic bipartite 3-connected graph and identify the new vertices

    The identified vertex gets index base.vertex_count. Without explicit edges
    the first vertex-disjoint pair in lexicographic order whose result passes
    the premise check is taken.

    Args:
        base (Graph | str): Base graph or one of CUBIC_BASES
        e1 (Edge | None, optional): First subdivided edge
        e2 (Edge | None, optional): Second subdivided edge

    Raises:
        PreconditionError: Bad base, overlapping edges, or premises failing on the result

    Returns:
        Graph: Order base.vertex_count + 1, edge count base.edge_count + 2
    """
    if isinstance(base, str):
        if base not in CUBIC_BASES:
            raise PreconditionError(f"unknown base {base!r}, expected one of {sorted(CUBIC_BASES)}")
        base = Graph.from_networkx(CUBIC_BASES[base]())
    _check_cubic_base(base)
    w = base.vertex_count

    if e1 is None or e2 is None:
        for a, b in combinations(base.edge_list, 2):
            if set(a) & set(b):
                continue
            g = _subdivide_and_identify(base, a, b)
            if not four_chromatic_premise_violations(g, w):
                logger.debug("Subdivided edges {} and {}", a, b)
                return g
        raise PreconditionError("no pair of edges gives a graph meeting the premises")

    e1, e2 = edge_key(*e1), edge_key(*e2)
    for e in (e1, e2):
        if e not in base.edges:
            raise PreconditionError(f"{e} is not an edge of the base graph")
    if set(e1) & set(e2):
        raise PreconditionError(f"edges {e1} and {e2} share a vertex")
    g = _subdivide_and_identify(base, e1, e2)
    problems = four_chromatic_premise_violations(g, w)
    if problems:
        raise PreconditionError("; ".join(problems))
    return g


def star_obstruction_graph(h: Graph | None = None, uv: Edge | None = None) -> Graph:
    """Four copies of h - uv tied together by x1, x2 and a vertex w adjacent to every copy vertex

    Copy i occupies indices i*m .. i*m + m - 1 for m = |V(h)|; x1 = 4m is joined
    to x2 and to every copy of u, x2 = 4m + 1 to every copy of v, and w = 4m + 2.
    The result is 3-connected with minimum degree at least 4 and w as its only
    even vertex, yet G - w has no parity subgraph of odd order for the star at w.
    """
    if h is None:
        h = Graph.from_networkx(nx.octahedral_graph())
    if uv is None:
        uv = h.edge_list[0]
    uv = edge_key(*uv)
    if uv not in h.edges:
        raise PreconditionError(f"{uv} is not an edge of the base graph")
    if h.vertex_count % 2 or not is_eulerian(h) or not is_k_connected(h, 3):
        raise PreconditionError("base graph must be 3-connected, Eulerian and of even order")

    m = h.vertex_count
    x1, x2, w = 4 * m, 4 * m + 1, 4 * m + 2
    u, v = uv
    edges: list[Edge] = [(x1, x2)]
    for i in range(4):
        offset = i * m
        edges.extend((a + offset, b + offset) for a, b in h.edge_list if (a, b) != uv)
        edges.append((x1, u + offset))
        edges.append((x2, v + offset))
        edges.extend((w, z + offset) for z in range(m))
    g = Graph(4 * m + 3, edges)

    if g.even_vertices() != (w,):
        raise InternalFault(f"expected {w} as the only even vertex, got {g.even_vertices()}")
    if min(g.degree(x) for x in g.vertices()) < 4 or not is_k_connected(g, 3):
        raise InternalFault("star obstruction graph lost minimum degree 4 or 3-connectivity")
    return g
