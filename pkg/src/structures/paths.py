from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from loguru import logger

from src.config import DEFAULT_SEARCH_BUDGET
from src.core.connectivity import is_k_connected
from src.core.graph import Edge, EdgeSubgraph, Graph, edge_key, is_connected, is_eulerian
from src.errors import InternalFault, PreconditionError, SearchBudgetExceeded


@dataclass(frozen=True)
class CyclePath:
    """
    Ordered vertex sequence of a path, or of a cycle when `closed` (the last
    vertex is then joined to the first).
    """
    vertices: tuple[int, ...]
    closed: bool
    parent: Graph = field(compare=False, repr=False)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise PreconditionError(f"repeated vertex in {self.vertices}")
        if self.closed and len(self.vertices) < 3:
            raise PreconditionError("a cycle needs at least three vertices")
        for u, v in self.edge_list():
            if not self.parent.has_edge(u, v):
                raise PreconditionError(f"{u} and {v} are consecutive but not adjacent")

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_list(self) -> list[Edge]:
        """Edges in walk order"""
        pairs = list(zip(self.vertices, self.vertices[1:]))
        if self.closed:
            pairs.append((self.vertices[-1], self.vertices[0]))
        return [edge_key(u, v) for u, v in pairs]

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def to_subgraph(self) -> EdgeSubgraph:
        return EdgeSubgraph.of(self.parent, self.edge_list())

    def chords(self) -> list[Edge]:
        own = set(self.edge_list())
        return [
            edge_key(u, v)
            for u, v in combinations(self.vertices, 2)
            if self.parent.has_edge(u, v) and edge_key(u, v) not in own
        ]

    def is_chordless(self) -> bool:
        return not self.chords()

    def is_nonseparating(self) -> bool:
        return is_connected(self.parent, without=self.vertices)


class SearchBudget:
    """Counts path extensions across one search"""

    def __init__(self, limit: int = DEFAULT_SEARCH_BUDGET):
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise SearchBudgetExceeded(f"structure search exceeded {self.limit} extensions")


def _induced_extensions(g: Graph, path: list[int], banned: set[int]) -> Iterator[int]:
    """Neighbors of the path end that keep the path induced, ascending"""
    inner = path[:-1]
    for y in g.neighbors(path[-1]):
        if y in banned or y in path:
            continue
        if any(g.has_edge(y, x) for x in inner):
            continue
        yield y


def _chordless_cycles_through(g: Graph, a: int, b: int, banned: set[int], budget: SearchBudget) -> Iterator[list[int]]:
    """Chordless cycles a, b, ... in lexicographic order of their vertex sequence"""

    def extend(path: list[int]) -> Iterator[list[int]]:
        end = path[-1]
        for y in g.neighbors(end):
            if y in banned or y in path:
                continue
            budget.tick()
            touching = [x for x in path[:-1] if g.has_edge(y, x)]
            if touching == [a]:
                yield path + [y]
            elif not touching:
                path.append(y)
                yield from extend(path)
                path.pop()

    yield from extend([a, b])


def nonseparating_chordless_cycle(
    g: Graph,
    e: Edge,
    v: int,
    budget: SearchBudget | None = None,
    validate: bool = True,
) -> CyclePath:
    """Chordless cycle through e avoiding v whose deletion leaves g connected

    Induced cycles through e are enumerated by extending an induced path from
    e in ascending neighbor order, so the first survivor of the connectivity
    filter is the lexicographically least one.
    """
    a, b = edge_key(*e)
    if not g.has_edge(a, b):
        raise PreconditionError(f"{a} {b} is not an edge")
    g.check_vertex(v)
    if v in (a, b):
        raise PreconditionError(f"vertex {v} is an end of the edge {a} {b}")
    if validate and not is_k_connected(g, 3):
        raise PreconditionError("nonseparating cycle search needs a 3-connected graph")

    budget = budget or SearchBudget()
    for cycle in _chordless_cycles_through(g, a, b, {v}, budget):
        if is_connected(g, without=cycle):
            logger.debug("Nonseparating chordless cycle through {}: {}", (a, b), cycle)
            return CyclePath(tuple(cycle), True, g)
    raise InternalFault(f"no nonseparating chordless cycle through {a} {b} avoiding {v}")


def _induced_paths(
    g: Graph,
    start: int,
    length: int,
    is_end,
    banned: set[int],
    budget: SearchBudget,
) -> Iterator[list[int]]:
    """Induced paths with `length` edges from start, ascending, whose last vertex satisfies is_end"""

    def extend(path: list[int]) -> Iterator[list[int]]:
        final = len(path) == length
        for y in _induced_extensions(g, path, banned):
            budget.tick()
            if final:
                if is_end(y):
                    yield path + [y]
                continue
            if is_end(y):
                continue
            path.append(y)
            yield from extend(path)
            path.pop()

    yield from extend([start])


def nonseparating_chordless_path(
    g: Graph,
    w: int,
    u: int,
    budget: SearchBudget | None = None,
    validate: bool = True,
) -> CyclePath:
    """Shortest chordless w-u path with connected complement, ties broken lexicographically"""
    g.check_vertex(w)
    g.check_vertex(u)
    if w == u or g.has_edge(w, u):
        raise PreconditionError(f"{w} and {u} must be distinct and nonadjacent")
    if validate and not is_k_connected(g, 3):
        raise PreconditionError("nonseparating path search needs a 3-connected graph")

    budget = budget or SearchBudget()
    for length in range(2, g.vertex_count):
        for path in _induced_paths(g, w, length, lambda y: y == u, set(), budget):
            if is_connected(g, without=path):
                logger.debug("Nonseparating chordless path {} -> {}: {}", w, u, path)
                return CyclePath(tuple(path), False, g)
    raise InternalFault(f"no nonseparating chordless path between {w} and {u}")


def shortest_even_endpoint_path(
    g: Graph,
    budget: SearchBudget | None = None,
    validate: bool = True,
) -> CyclePath:
    """Shortest chordless path joining two even vertices, all inner vertices odd

    An edge between two even vertices wins outright. Otherwise paths are tried
    by increasing length, starting from the smaller end, and the first one with
    connected complement is shortened to its prefix while an inner vertex has
    even degree.
    """
    evens = set(g.even_vertices())
    if len(evens) < 2:
        raise PreconditionError(f"need two vertices of even degree, found {len(evens)}")
    if validate:
        if g.vertex_count % 2 == 0:
            raise PreconditionError("even endpoint path needs odd order")
        if not is_k_connected(g, 3):
            raise PreconditionError("even endpoint path needs a 3-connected graph")

    for a, b in g.edge_list:
        if a in evens and b in evens:
            logger.debug("Adjacent even vertices {} {}", a, b)
            return CyclePath((a, b), False, g)

    budget = budget or SearchBudget()
    for length in range(2, g.vertex_count):
        for a in sorted(evens):
            candidates = _induced_paths(g, a, length, lambda y, a=a: y in evens and y > a, set(), budget)
            for path in candidates:
                if is_connected(g, without=path):
                    return _shorten(g, path, evens)
    raise InternalFault("no chordless path between even vertices with connected complement")


def _shorten(g: Graph, path: list[int], evens: set[int]) -> CyclePath:
    while True:
        inner_even = next((i for i in range(1, len(path) - 1) if path[i] in evens), None)
        if inner_even is None:
            break
        logger.debug("Shortening {} at even vertex {}", path, path[inner_even])
        path = path[:inner_even + 1]
    if not is_connected(g, without=path):
        raise InternalFault(f"shortened path {path} separates the graph")
    logger.debug("Even endpoint path: {}", path)
    return CyclePath(tuple(path), False, g)


def eulerian_removable_pair(g: Graph) -> tuple[int, int]:
    """Adjacent w, u with g - w and g - {w, u} connected; edges scanned ascending"""
    if not is_eulerian(g):
        raise PreconditionError("removable pair search needs a connected Eulerian graph")
    for a, b in g.edge_list:
        for w, u in ((a, b), (b, a)):
            if is_connected(g, without=[w]) and is_connected(g, without=[w, u]):
                return w, u
    raise InternalFault("no removable adjacent pair in an Eulerian graph")


def nonadjacent_removable_pair(g: Graph) -> tuple[int, int]:
    """Lexicographically first nonadjacent x < y with g - {x, y} connected"""
    if not is_connected(g):
        raise PreconditionError("removable pair search needs a connected graph")
    if g.is_cycle() or g.is_complete():
        raise PreconditionError("graph is a cycle or complete")
    for x, y in combinations(g.vertices(), 2):
        if not g.has_edge(x, y) and is_connected(g, without=[x, y]):
            return x, y
    raise InternalFault("no removable nonadjacent pair")


def chordless_subcycle(g: Graph, cycle: Iterable[int], keep: int) -> CyclePath:
    """Shortcut chords of a cycle until it is chordless, always keeping `keep`

    The lexicographically least chord is applied first; it splits the cycle in
    two and the part holding `keep` survives (the shorter one, then the
    lexicographically smaller one, when both hold it).
    """
    current = list(cycle)
    if keep not in current:
        raise PreconditionError(f"vertex {keep} is not on the cycle")
    while True:
        chords = CyclePath(tuple(current), True, g).chords()
        if not chords:
            return CyclePath(tuple(current), True, g)
        x, y = chords[0]
        i, j = sorted((current.index(x), current.index(y)))
        inner = current[i:j + 1]
        outer = current[j:] + current[:i + 1]
        parts = [p for p in (inner, outer) if keep in p]
        current = min(parts, key=lambda p: (len(p), _canonical(p)))


def _canonical(cycle: list[int]) -> tuple[int, ...]:
    """Rotation starting at the least vertex, in its smaller direction"""
    i = cycle.index(min(cycle))
    forward = cycle[i:] + cycle[:i]
    backward = [forward[0]] + forward[1:][::-1]
    return tuple(min(forward, backward))
