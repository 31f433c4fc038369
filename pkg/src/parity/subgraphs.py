from collections import deque
from typing import AbstractSet

from loguru import logger

from src.coloring.tree import odd_color_tree
from src.core.graph import Edge, EdgeSubgraph, Graph, edge_key, is_connected, spanning_tree
from src.errors import InternalFault, PreconditionError

# Vertices required to have odd degree in a target subgraph
ParitySet = AbstractSet[int]


def _check_parity_set(s: ParitySet) -> frozenset[int]:
    s = frozenset(s)
    if len(s) % 2:
        raise PreconditionError(f"parity set must have even size, got {len(s)}")
    return s


def tree_t_join(t: EdgeSubgraph, s: ParitySet) -> EdgeSubgraph:
    """Unique edge set J inside the tree t whose odd-degree vertices are exactly s

    One post-order pass: a tree edge enters J iff the subtree below it holds an
    odd number of s-vertices. Forests are accepted when every component holds an
    even number of s-vertices.

    Args:
        t (EdgeSubgraph): Tree (or forest) edges
        s (ParitySet): Even set of vertices covered by t

    Raises:
        PreconditionError: |s| odd, s not covered, t cyclic, or a component with odd share of s

    Returns:
        EdgeSubgraph: J, a forest whose leaves all lie in s
    """
    s = _check_parity_set(s)
    covered = t.vertices
    if not s <= covered:
        raise PreconditionError(f"parity vertices {sorted(s - covered)} are not covered by the tree")
    if not t.is_acyclic():
        raise PreconditionError("t-join base is not a forest")

    adjacency: dict[int, list[int]] = {v: [] for v in covered}
    for u, v in t.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)

    join: set[Edge] = set()
    seen: set[int] = set()
    for root in sorted(covered):
        if root in seen:
            continue
        order = []
        parent = {root: root}
        queue = deque([root])
        seen.add(root)
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(adjacency[x]):
                if y not in seen:
                    seen.add(y)
                    parent[y] = x
                    queue.append(y)
        odd = {x: x in s for x in order}
        for x in reversed(order[1:]):
            if odd[x]:
                join.add(edge_key(x, parent[x]))
                odd[parent[x]] = not odd[parent[x]]
        if odd[root]:
            raise PreconditionError(f"component of vertex {root} holds an odd number of parity vertices")
    return EdgeSubgraph(t.parent, frozenset(join))


def spanning_parity_subgraph(g: Graph, s: ParitySet) -> EdgeSubgraph:
    """Edge set with odd degree exactly on s, each nontrivial component meeting s"""
    s = _check_parity_set(s)
    if not is_connected(g):
        raise PreconditionError("parity subgraph needs a connected graph")
    return tree_t_join(spanning_tree(g), s)


def odd_factor(g: Graph) -> EdgeSubgraph:
    if g.vertex_count % 2:
        raise PreconditionError(f"odd factor needs even order, got {g.vertex_count}")
    if not is_connected(g):
        raise PreconditionError("odd factor needs a connected graph")
    return spanning_parity_subgraph(g, frozenset(g.vertices()))


def odd_factor_through_vertex(g: Graph, w: int) -> EdgeSubgraph:
    """Odd factor F holding every edge at w, with G - E(F) a forest

    Take a spanning tree T of G - w and start from F0 = E(w) plus all non-tree
    edges of G - w. The vertices of even F0-degree form an even set, and the
    tree t-join of that set inside T fixes their parity. The complement is a
    subforest of T.
    """
    g.check_vertex(w)
    if g.vertex_count % 2:
        raise PreconditionError(f"odd factor needs even order, got {g.vertex_count}")
    if g.degree(w) % 2 == 0:
        raise PreconditionError(f"vertex {w} has even degree {g.degree(w)}")
    if not is_connected(g) or not is_connected(g, without=[w]):
        raise PreconditionError(f"graph and graph minus {w} must be connected")

    rest, vmap = g.delete_vertices([w])
    tree = EdgeSubgraph(g, vmap.lift_edges(spanning_tree(rest).edges))
    start = EdgeSubgraph(g, frozenset(e for e in g.edges if e not in tree.edges))
    degrees = start.degrees()
    s = {v for v in g.vertices() if v != w and degrees[v] % 2 == 0}
    factor = start.union(tree_t_join(tree, s))

    degrees = factor.degrees()
    if any(degrees[v] % 2 == 0 for v in g.vertices()):
        raise InternalFault(f"odd factor through {w} has an even vertex")
    if not factor.complement().is_acyclic():
        raise InternalFault(f"complement of the odd factor through {w} has a cycle")
    logger.trace("Odd factor through {}: {} edges", w, len(factor))
    return factor


def forest_split_decomposition(g: Graph, w: int) -> tuple[EdgeSubgraph, EdgeSubgraph]:
    """Split E(g) in two classes, odd at every covered vertex other than w

    Needs only g - w acyclic. Every edge at w is moved to a fresh leaf, the
    resulting forest is tree-colored and the colors are pulled back.
    """
    g.check_vertex(w)
    rest, vmap = g.delete_vertices([w])
    if not rest.is_forest():
        raise PreconditionError(f"graph minus {w} is not a forest")

    origin: list[Edge] = [vmap.lift_edge(e) for e in rest.edge_list]
    exploded = list(rest.edge_list)
    leaf = rest.vertex_count
    for x in g.neighbors(w):
        exploded.append((vmap.to_new(x), leaf))
        origin.append(edge_key(w, x))
        leaf += 1
    forest = Graph(leaf, exploded)
    coloring = odd_color_tree(forest)

    classes: tuple[set[Edge], set[Edge]] = (set(), set())
    for e, original in zip(exploded, origin):
        classes[coloring.color_of(*e) - 1].add(original)
    h1, h2 = (EdgeSubgraph(g, frozenset(c)) for c in classes)

    for part in (h1, h2):
        for x, d in part.degrees().items():
            if x != w and d % 2 == 0:
                raise InternalFault(f"forest split left vertex {x} with even degree {d}")
    return h1, h2
