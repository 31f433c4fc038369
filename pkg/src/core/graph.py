from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx
from networkx.utils import UnionFind

from src.errors import PreconditionError

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (smaller, larger) form of an undirected edge"""
    if u == v:
        raise PreconditionError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class VertexMap:
    """
    Index translation recorded when vertices are deleted from a dense graph.
    `new_to_old[i]` is the parent index of vertex i of the smaller graph.
    """
    __slots__ = ("new_to_old", "old_to_new")

    def __init__(self, kept: Iterable[int]):
        self.new_to_old: tuple[int, ...] = tuple(sorted(kept))
        self.old_to_new: dict[int, int] = {old: new for new, old in enumerate(self.new_to_old)}

    def to_old(self, v: int) -> int:
        return self.new_to_old[v]

    def to_new(self, v: int) -> int:
        try:
            return self.old_to_new[v]
        except KeyError:
            raise PreconditionError(f"vertex {v} was deleted") from None

    def lift_edge(self, e: Edge) -> Edge:
        return edge_key(self.new_to_old[e[0]], self.new_to_old[e[1]])

    def lift_edges(self, edges: Iterable[Edge]) -> frozenset[Edge]:
        return frozenset(self.lift_edge(e) for e in edges)

    def lift_vertices(self, vertices: Iterable[int]) -> list[int]:
        return [self.new_to_old[v] for v in vertices]

    def push_edge(self, e: Edge) -> Edge:
        return edge_key(self.to_new(e[0]), self.to_new(e[1]))

    def push_vertices(self, vertices: Iterable[int]) -> set[int]:
        return {self.to_new(v) for v in vertices}


class Graph:
    """
    Simple undirected graph on the dense vertex set 0..vertex_count-1.
    Immutable; neighbor lists are kept in ascending order so that every
    traversal built on top of it is reproducible.
    """
    __slots__ = ("_n", "_edges", "_edge_list", "_adj", "_adj_sets")

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if vertex_count < 0:
            raise PreconditionError(f"negative vertex count {vertex_count}")
        self._n = vertex_count
        edge_set: set[Edge] = set()
        for raw in edges:
            u, v = int(raw[0]), int(raw[1])
            for x in (u, v):
                if not 0 <= x < vertex_count:
                    raise PreconditionError(f"vertex {x} out of range [0, {vertex_count})")
            e = edge_key(u, v)
            if e in edge_set:
                raise PreconditionError(f"multi-edge {e[0]} {e[1]}")
            edge_set.add(e)
        self._edges = frozenset(edge_set)
        self._edge_list = tuple(sorted(edge_set))
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in self._edge_list:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._adj_sets = tuple(frozenset(nbrs) for nbrs in adj)

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Relabel the nodes of `nx_graph` to 0..n-1 in sorted order"""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), ((index[a], index[b]) for a, b in nx_graph.edges()))

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self._n))
        nx_graph.add_edges_from(self._edge_list)
        return nx_graph

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edge_list)

    @property
    def edges(self) -> frozenset[Edge]:
        return self._edges

    @property
    def edge_list(self) -> tuple[Edge, ...]:
        return self._edge_list

    def vertices(self) -> range:
        return range(self._n)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise PreconditionError(f"invalid vertex {v} for a graph of order {self._n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self._adj_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self._n and v in self._adj_sets[u]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self._adj[v])

    def incident_edges(self, v: int) -> tuple[Edge, ...]:
        return tuple(edge_key(v, x) for x in self.neighbors(v))

    def even_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self._n) if len(self._adj[v]) % 2 == 0)

    def odd_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self._n) if len(self._adj[v]) % 2 == 1)

    def delete_vertices(self, removed: Iterable[int]) -> tuple["Graph", VertexMap]:
        """G - X, with the recorded old -> new index map"""
        removed = set(removed)
        for v in removed:
            self.check_vertex(v)
        vmap = VertexMap(v for v in range(self._n) if v not in removed)
        edges = [
            (vmap.old_to_new[u], vmap.old_to_new[v])
            for u, v in self._edge_list
            if u not in removed and v not in removed
        ]
        return Graph(len(vmap.new_to_old), edges), vmap

    def induced(self, kept: Iterable[int]) -> tuple["Graph", VertexMap]:
        kept = set(kept)
        return self.delete_vertices(v for v in range(self._n) if v not in kept)

    def delete_edges(self, removed: Iterable[Edge]) -> "Graph":
        """G - E', on the same vertex set"""
        removed = {edge_key(*e) for e in removed}
        missing = removed - self._edges
        if missing:
            raise PreconditionError(f"edges not in graph: {sorted(missing)}")
        return Graph(self._n, (e for e in self._edge_list if e not in removed))

    def components(self, removed: Iterable[int] = ()) -> list[list[int]]:
        """Vertex sets of the components of G - removed, each sorted, ordered by least vertex"""
        removed = set(removed)
        seen = set(removed)
        result = []
        for start in range(self._n):
            if start in seen:
                continue
            seen.add(start)
            comp = [start]
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            result.append(sorted(comp))
        return result

    def is_forest(self) -> bool:
        return self.edge_count == self._n - len(self.components())

    def is_cycle(self) -> bool:
        return (
            self._n >= 3
            and all(len(nbrs) == 2 for nbrs in self._adj)
            and len(self.components()) == 1
        )

    def is_complete(self) -> bool:
        return self.edge_count == self._n * (self._n - 1) // 2

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.edge_count})"


@dataclass(frozen=True)
class EdgeSubgraph:
    """
    Subgraph given by its edge set. Covered vertices are the endpoints of its
    edges; an uncovered vertex stands for a trivial component.
    """
    parent: Graph
    edges: frozenset[Edge]

    def __post_init__(self):
        stray = self.edges - self.parent.edges
        if stray:
            raise PreconditionError(f"edges not in parent graph: {sorted(stray)[:5]}")

    @classmethod
    def of(cls, parent: Graph, edges: Iterable[Sequence[int]] = ()) -> "EdgeSubgraph":
        return cls(parent, frozenset(edge_key(e[0], e[1]) for e in edges))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __contains__(self, e: object) -> bool:
        return e in self.edges

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)

    def degrees(self) -> Counter:
        return Counter(x for e in self.edges for x in e)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def odd_vertices(self) -> frozenset[int]:
        return frozenset(v for v, d in self.degrees().items() if d % 2 == 1)

    def _check_parent(self, other: "EdgeSubgraph") -> None:
        if self.parent != other.parent:
            raise PreconditionError("subgraphs of different parent graphs")

    def union(self, other: "EdgeSubgraph | Iterable[Edge]") -> "EdgeSubgraph":
        if isinstance(other, EdgeSubgraph):
            self._check_parent(other)
            return EdgeSubgraph(self.parent, self.edges | other.edges)
        return EdgeSubgraph(self.parent, self.edges | {edge_key(*e) for e in other})

    def difference(self, other: "EdgeSubgraph | Iterable[Edge]") -> "EdgeSubgraph":
        if isinstance(other, EdgeSubgraph):
            self._check_parent(other)
            return EdgeSubgraph(self.parent, self.edges - other.edges)
        return EdgeSubgraph(self.parent, self.edges - {edge_key(*e) for e in other})

    def complement(self) -> "EdgeSubgraph":
        return EdgeSubgraph(self.parent, self.parent.edges - self.edges)

    def components(self) -> list["EdgeSubgraph"]:
        """Nontrivial components, ordered by least covered vertex"""
        uf = UnionFind()
        for u, v in self.edges:
            uf.union(u, v)
        groups: dict[int, set[Edge]] = {}
        for e in self.edges:
            groups.setdefault(uf[e[0]], set()).add(e)
        comps = [EdgeSubgraph(self.parent, frozenset(es)) for es in groups.values()]
        return sorted(comps, key=lambda c: min(c.vertices))

    def is_acyclic(self) -> bool:
        uf = UnionFind()
        for u, v in sorted(self.edges):
            if uf[u] == uf[v]:
                return False
            uf.union(u, v)
        return True

    def spanning_graph(self) -> Graph:
        """The subgraph as a graph on all parent vertices"""
        return Graph(self.parent.vertex_count, self.edges)

    def to_graph(self) -> tuple[Graph, VertexMap]:
        """Dense graph on the covered vertices only"""
        vmap = VertexMap(self.vertices)
        return Graph(len(vmap.new_to_old), (vmap.push_edge(e) for e in self.edges)), vmap


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def is_connected(g: Graph, without: Iterable[int] = ()) -> bool:
    """Connectivity of G - without; the empty graph counts as connected"""
    return len(g.components(without)) <= 1


def is_eulerian(g: Graph) -> bool:
    return is_connected(g) and all(g.degree(v) % 2 == 0 for v in g.vertices())


def symmetric_difference(a: EdgeSubgraph, b: EdgeSubgraph) -> EdgeSubgraph:
    a._check_parent(b)
    return EdgeSubgraph(a.parent, a.edges ^ b.edges)


def bfs_tree_edges(g: Graph, root: int) -> list[Edge]:
    """Breadth-first tree edges of the component of `root`, neighbors in ascending order"""
    seen = {root}
    queue = deque([root])
    tree = []
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                tree.append(edge_key(x, y))
                queue.append(y)
    return tree


def spanning_tree(g: Graph) -> EdgeSubgraph:
    if not is_connected(g):
        raise PreconditionError("spanning tree of a disconnected graph")
    if g.vertex_count == 0:
        return EdgeSubgraph(g, frozenset())
    return EdgeSubgraph.of(g, bfs_tree_edges(g, 0))
