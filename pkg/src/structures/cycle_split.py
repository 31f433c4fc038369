from dataclasses import dataclass
from typing import AbstractSet

from src.core.graph import Edge, EdgeSubgraph, edge_key
from src.errors import PreconditionError
from src.structures.paths import CyclePath


@dataclass(frozen=True)
class CycleSplit:
    """Two edge-disjoint arc unions of a cycle, meeting exactly in the split set"""
    first: EdgeSubgraph
    second: EdgeSubgraph

    def part(self, i: int) -> EdgeSubgraph:
        return (self.first, self.second)[i - 1]

    def containing(self, v: int) -> EdgeSubgraph:
        """The part covering v; the first part when v is covered by both"""
        return self.first if v in self.first.vertices else self.second


def cycle_split(c: CyclePath, s: AbstractSet[int]) -> CycleSplit:
    """Walk the cycle from its lowest s-vertex, switching parts at every s-vertex

    Every s-vertex gets degree 1 in both parts, the other cycle vertices degree
    0 or 2. An empty s gives (C, empty).
    """
    if not c.closed:
        raise PreconditionError("cycle split needs a cycle")
    s = frozenset(s)
    if len(s) % 2:
        raise PreconditionError(f"split set must have even size, got {len(s)}")
    if not s <= c.vertex_set:
        raise PreconditionError(f"split vertices {sorted(s - c.vertex_set)} are off the cycle")
    empty = EdgeSubgraph(c.parent, frozenset())
    if not s:
        return CycleSplit(c.to_subgraph(), empty)

    vertices = c.vertices
    start = vertices.index(min(s))
    m = len(vertices)
    parts: tuple[set[Edge], set[Edge]] = (set(), set())
    current = 0
    for step in range(m):
        x = vertices[(start + step) % m]
        y = vertices[(start + step + 1) % m]
        parts[current].add(edge_key(x, y))
        if y in s:
            current = 1 - current
    return CycleSplit(EdgeSubgraph(c.parent, frozenset(parts[0])), EdgeSubgraph(c.parent, frozenset(parts[1])))
