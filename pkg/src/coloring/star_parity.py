# Star parity subgraphs
# =====================
#
# For a 4-connected graph of odd order whose only even vertex w misses some
# vertex, find F1, F2 in G - w with covered vertex counts of opposite parity,
# each covering N(w), each component meeting N(w) and odd degree exactly on
# N(w). The construction runs on a nonseparating chordless cycle C through a
# vertex u not adjacent to w, with R = G - w - V(C), and branches on the
# parities of |N(w) on C| and |V(C)|.

from dataclasses import dataclass
from typing import Iterable, Iterator

import networkx as nx
from loguru import logger

from src.core.connectivity import disjoint_paths, is_k_connected
from src.core.graph import EdgeSubgraph, Graph, edge_key, is_connected
from src.errors import InternalFault, PathsNotFound, PreconditionError
from src.parity.subgraphs import spanning_parity_subgraph
from src.structures.cycle_split import cycle_split
from src.structures.paths import CyclePath, SearchBudget, chordless_subcycle, nonseparating_chordless_cycle

Pair = tuple[EdgeSubgraph, EdgeSubgraph]


@dataclass(frozen=True)
class StarParityResult:
    first: EdgeSubgraph
    second: EdgeSubgraph
    case: str
    cycle: CyclePath

    def odd_part(self) -> EdgeSubgraph:
        """The subgraph covering an odd number of vertices"""
        return self.first if len(self.first.vertices) % 2 else self.second


def star_parity_violations(g: Graph, w: int, f: EdgeSubgraph) -> list[str]:
    """Every way f fails to be a parity subgraph for the star at w; empty when it passes"""
    problems = []
    nbrs = g.neighbor_set(w)
    covered = f.vertices
    if w in covered:
        problems.append(f"uses an edge at {w}")
    missing = sorted(nbrs - covered)
    if missing:
        problems.append(f"misses neighbors {missing}")
    for comp in f.components():
        if not comp.vertices & nbrs:
            problems.append(f"component at {min(comp.vertices)} has no neighbor of {w}")
    for v, d in sorted(f.degrees().items()):
        if (d % 2 == 1) != (v in nbrs):
            problems.append(f"vertex {v} has degree {d}")
    return problems


def _pair_is_valid(g: Graph, w: int, pair: Pair) -> bool:
    first, second = pair
    if len(first.vertices) % 2 == len(second.vertices) % 2:
        return False
    return not star_parity_violations(g, w, first) and not star_parity_violations(g, w, second)


class _StarParityBuilder:
    def __init__(self, g: Graph, w: int, cycle: CyclePath, u: int):
        self.g = g
        self.w = w
        self.cycle = cycle
        self.u = u
        self.nbrs = g.neighbor_set(w)
        on_cycle = cycle.vertex_set
        self.rest_vertices = frozenset(v for v in g.vertices() if v != w and v not in on_cycle)
        self.n_cycle = sorted(self.nbrs & on_cycle)
        self.n_rest = self.nbrs & self.rest_vertices

    def rest_neighbors(self, z: int) -> list[int]:
        return [y for y in self.g.neighbors(z) if y in self.rest_vertices]

    def rest_parity(self, s: Iterable[int]) -> EdgeSubgraph:
        """Parity subgraph of R odd exactly on s, in the indices of g"""
        rest, vmap = self.g.induced(self.rest_vertices)
        sub = spanning_parity_subgraph(rest, vmap.push_vertices(s))
        return EdgeSubgraph(self.g, vmap.lift_edges(sub.edges))

    def with_split(self, base: EdgeSubgraph, s: Iterable[int], cycle: CyclePath | None = None) -> Pair:
        split = cycle_split(cycle or self.cycle, set(s))
        return base.union(split.first), base.union(split.second)

    def require(self, pair: Pair, case: str) -> Pair:
        if not _pair_is_valid(self.g, self.w, pair):
            raise InternalFault(f"star parity {case} produced subgraphs breaking the contract")
        return pair

    def first_rest_neighbor(self, z: int) -> int:
        for y in self.rest_neighbors(z):
            return y
        raise InternalFault(f"cycle vertex {z} has no usable neighbor off the cycle")

    def prune(self, sub: EdgeSubgraph) -> EdgeSubgraph:
        """Drop components without a neighbor of w"""
        kept = [c.edges for c in sub.components() if c.vertices & self.nbrs]
        return EdgeSubgraph(self.g, frozenset().union(*kept))

    def bridge_host(self, base: EdgeSubgraph, a: int, strict: bool) -> tuple[Graph, list[int]]:
        blocked = {self.w}
        if strict:
            blocked |= base.vertices - {a}
        host, vmap = self.g.delete_vertices(blocked)
        return host, list(vmap.new_to_old)

    def fans(self, base: EdgeSubgraph, targets: frozenset[int], k: int) -> Iterator[list[list[int]]]:
        """k paths from a single vertex of base to targets, first avoiding the rest of base"""
        for strict in (True, False):
            for a in sorted(base.vertices):
                host, new_to_old = self.bridge_host(base, a, strict)
                old_to_new = {old: new for new, old in enumerate(new_to_old)}
                try:
                    paths = disjoint_paths(host, [old_to_new[a]], [old_to_new[t] for t in targets], k)
                except PathsNotFound:
                    continue
                yield [[new_to_old[x] for x in p] for p in paths]

    def joined(self, base: EdgeSubgraph, p: list[int], q: list[int]) -> tuple[EdgeSubgraph, set[int]]:
        """base with the path q^-1 + p toggled in and pruned, and the path ends"""
        walk = list(reversed(p)) + q[1:]
        edges = {edge_key(x, y) for x, y in zip(walk, walk[1:])}
        toggled = EdgeSubgraph(self.g, base.edges ^ edges)
        return self.prune(toggled), {walk[0], walk[-1]}

    def bridge(self, base: EdgeSubgraph, cycle: CyclePath, case: str) -> Pair:
        """No neighbor of w on the cycle: route a path through base between two cycle vertices"""
        for paths in self.fans(base, cycle.vertex_set, 2):
            plus, ends = self.joined(base, paths[0], paths[1])
            pair = self.with_split(plus, ends, cycle)
            if _pair_is_valid(self.g, self.w, pair):
                logger.debug("Star parity {}: bridge {} - {}", case, paths[0], paths[1])
                return pair
            logger.warning("Star parity {}: bridge {} - {} rejected", case, paths[0], paths[1])
        raise InternalFault(f"star parity {case}: no admissible bridge")

    def case_1(self) -> Pair:
        x = self.first_rest_neighbor(self.u)
        base = self.rest_parity(self.n_rest ^ {x}).union([(self.u, x)])
        return self.require(self.with_split(base, set(self.n_cycle) | {self.u}), "case-1")

    def case_2(self) -> Pair:
        u2 = self.n_cycle[0]
        x2 = self.first_rest_neighbor(u2)
        base = self.rest_parity(self.n_rest ^ {x2}).union([(u2, x2)])
        return self.require(self.with_split(base, set(self.n_cycle) - {u2}), "case-2")

    def case_3(self) -> tuple[Pair, str]:
        base = self.rest_parity(self.n_rest)
        if self.n_cycle:
            return self.require(self.with_split(base, self.n_cycle), "case-3"), "case-3"
        return self.bridge(base, self.cycle, "case-3-bridge"), "case-3-bridge"

    def case_4(self) -> tuple[Pair, str]:
        if self.n_cycle:
            return self._case_4_neighbors(), "case-4"
        return self._case_4_empty()

    def _case_4_neighbors(self) -> Pair:
        u2 = self.n_cycle[0]
        for x in self.rest_neighbors(self.u):
            x2 = next((y for y in self.rest_neighbors(u2) if y != x), None)
            if x2 is None:
                continue
            base = self.rest_parity(self.n_rest ^ {x, x2}).union([(self.u, x), (u2, x2)])
            return self.require(self.with_split(base, (set(self.n_cycle) - {u2}) | {self.u}), "case-4")
        raise InternalFault("no distinct off-cycle neighbors for case 4")

    def _case_4_empty(self) -> tuple[Pair, str]:
        near = self.rest_neighbors(self.u)
        if len(near) < 2:
            raise InternalFault(f"vertex {self.u} has fewer than two neighbors off the cycle")
        x1, x2 = near[:2]
        base = self.rest_parity(self.n_rest ^ {x1, x2})
        first = base.union([(self.u, x1), (self.u, x2)])
        pair = (first, first.union(self.cycle.to_subgraph()))
        if _pair_is_valid(self.g, self.w, pair):
            return pair, "case-4-empty"

        component = next(c for c in base.components() if x1 in c.vertices)
        if x2 not in component.vertices or component.vertices & self.nbrs:
            raise InternalFault("case 4 exception without a neighbor-free component joining both ends")
        reduced = base.difference(component)
        tree = nx.Graph(list(component.edges))
        loop = [self.u] + nx.shortest_path(tree, x1, x2)
        second = chordless_subcycle(self.g, loop, self.u)
        logger.debug("Star parity case 4: second cycle {}", second.vertices)
        if len(second) % 2:
            return self.bridge(reduced, second, "case-4-second-cycle-odd"), "case-4-second-cycle-odd"
        return self._two_cycles(reduced, second), "case-4-second-cycle-even"

    def _two_cycles(self, base: EdgeSubgraph, second: CyclePath) -> Pair:
        """Three paths from base to C and D; two of them landing on the same cycle are joined"""
        targets = self.cycle.vertex_set | second.vertex_set
        for paths in self.fans(base, targets, 3):
            on_first = [p for p in paths if p[-1] in self.cycle.vertex_set]
            on_second = [p for p in paths if p[-1] in second.vertex_set]
            if len(on_first) >= 2:
                main, other, chosen = self.cycle, second, on_first
            else:
                main, other, chosen = second, self.cycle, on_second
            plus, ends = self.joined(base, chosen[0], chosen[1])
            split = cycle_split(main, ends)
            first = plus.union(split.containing(self.u))
            pair = (first, first.union(other.to_subgraph()))
            if _pair_is_valid(self.g, self.w, pair):
                return pair
            logger.warning("Star parity case 4: paths {} rejected", paths)
        raise InternalFault("star parity case 4: no admissible path triple")


def star_parity_subgraphs(
    g: Graph,
    w: int | None = None,
    cycle: CyclePath | Iterable[int] | None = None,
    budget: SearchBudget | None = None,
    validate: bool = True,
) -> StarParityResult:
    """Two parity subgraphs of G - w with covered counts of opposite parity

    Args:
        g (Graph): 4-connected graph of odd order
        w (int | None, optional): Its unique even vertex, found when None
        cycle (CyclePath | Iterable[int] | None, optional): Nonseparating chordless
            cycle of G - w through a vertex not adjacent to w; searched for when None
        budget (SearchBudget | None, optional): Budget of the cycle search
        validate (bool, optional): Check 4-connectivity. Defaults to True.

    Returns:
        StarParityResult: F1, F2, the case taken and the cycle used
    """
    if g.vertex_count % 2 == 0:
        raise PreconditionError(f"odd order required, got {g.vertex_count}")
    evens = g.even_vertices()
    if len(evens) != 1:
        raise PreconditionError(f"exactly one vertex of even degree required, found {len(evens)}")
    if w is None:
        w = evens[0]
    elif w != evens[0]:
        raise PreconditionError(f"vertex {w} is not the unique even vertex {evens[0]}")
    far = [v for v in g.vertices() if v != w and not g.has_edge(v, w)]
    if not far:
        raise PreconditionError(f"vertex {w} is adjacent to every other vertex")
    if validate and not is_k_connected(g, 4):
        raise PreconditionError("4-connected graph required")

    if cycle is None:
        u = far[0]
        rest, vmap = g.delete_vertices([w])
        nu = vmap.to_new(u)
        e = (nu, rest.neighbors(nu)[0])
        v = next(x for x in rest.vertices() if x not in e)
        found = nonseparating_chordless_cycle(rest, e, v, budget=budget, validate=False)
        cycle = CyclePath(tuple(vmap.lift_vertices(found.vertices)), True, g)
    else:
        if not isinstance(cycle, CyclePath):
            cycle = CyclePath(tuple(cycle), True, g)
        if w in cycle.vertex_set or not cycle.is_chordless():
            raise PreconditionError("cycle must be chordless and avoid the even vertex")
        if not is_connected(g, without=[w, *cycle.vertices]):
            raise PreconditionError("cycle separates the graph minus the even vertex")
        on_cycle = [v for v in far if v in cycle.vertex_set]
        if not on_cycle:
            raise PreconditionError(f"cycle has no vertex outside the neighborhood of {w}")
        u = on_cycle[0]

    builder = _StarParityBuilder(g, w, cycle, u)
    odd_neighbors = len(builder.n_cycle) % 2 == 1
    odd_cycle = len(cycle) % 2 == 1
    if odd_neighbors and odd_cycle:
        pair, case = builder.case_1(), "case-1"
    elif odd_neighbors:
        pair, case = builder.case_2(), "case-2"
    elif odd_cycle:
        pair, case = builder.case_3()
    else:
        pair, case = builder.case_4()
    logger.debug("Star parity at {}: cycle {} through {}, {}", w, cycle.vertices, u, case)
    return StarParityResult(pair[0], pair[1], case, cycle)
