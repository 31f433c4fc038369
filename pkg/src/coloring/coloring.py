from dataclasses import dataclass, field
from typing import Iterable, Mapping

from src.core.graph import Edge, EdgeSubgraph, Graph, VertexMap, edge_key
from src.errors import InternalFault, PartialColoringError, PreconditionError


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """
    Total assignment of the parent's edges to colors 1..k.
    Validity is checked by `verify_coloring`, never assumed.
    """
    parent: Graph
    assignment: Mapping[Edge, int]
    provenance: str = ""

    def __post_init__(self):
        keys = set(self.assignment)
        if keys != self.parent.edges:
            uncolored = sorted(self.parent.edges - keys)
            stray = sorted(keys - self.parent.edges)
            raise PartialColoringError(
                f"coloring is not total: {len(uncolored)} uncolored edges {uncolored[:5]}, "
                f"{len(stray)} non-edges {stray[:5]}"
            )
        bad = [c for c in self.assignment.values() if not isinstance(c, int) or c < 1]
        if bad:
            raise PartialColoringError(f"colors must be positive integers, got {bad[:5]}")

    @classmethod
    def from_classes(
        cls,
        parent: Graph,
        classes: Iterable[EdgeSubgraph | Iterable[Edge]],
        provenance: str = "",
    ) -> "EdgeColoring":
        """Number the nonempty classes 1..k in the given order"""
        assignment: dict[Edge, int] = {}
        color = 0
        for part in classes:
            edges = part.edges if isinstance(part, EdgeSubgraph) else {edge_key(*e) for e in part}
            if not edges:
                continue
            color += 1
            for e in edges:
                if e in assignment:
                    raise PreconditionError(f"edge {e} lies in two classes")
                assignment[e] = color
        return cls(parent, assignment, provenance)

    @property
    def k(self) -> int:
        """Number of colors in use"""
        return max(self.assignment.values(), default=0)

    def color_of(self, u: int, v: int) -> int:
        return self.assignment[edge_key(u, v)]

    def classes(self) -> list[EdgeSubgraph]:
        groups: list[set[Edge]] = [set() for _ in range(self.k)]
        for e, c in self.assignment.items():
            groups[c - 1].add(e)
        return [EdgeSubgraph(self.parent, frozenset(es)) for es in groups]

    def lift(self, vmap: VertexMap) -> dict[Edge, int]:
        """Assignment translated to the indices of the graph this one was cut from"""
        return {vmap.lift_edge(e): c for e, c in self.assignment.items()}


@dataclass(frozen=True)
class DecompositionResult:
    classes: list[EdgeSubgraph]
    provenance: str

    def __post_init__(self):
        if not self.classes:
            return
        parent = self.classes[0].parent
        total = 0
        union: set[Edge] = set()
        for part in self.classes:
            if part.parent != parent:
                raise PreconditionError("classes of different parent graphs")
            total += len(part)
            union |= part.edges
        if total != len(union):
            raise PreconditionError("classes are not edge-disjoint")
        if union != parent.edges:
            raise PartialColoringError(f"classes miss {len(parent.edges - union)} edges")

    def to_coloring(self) -> EdgeColoring:
        return EdgeColoring.from_classes(self.classes[0].parent, self.classes, self.provenance)


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    # (vertex, class, degree) of the first even positive class degree
    violation: tuple[int, int, int] | None = field(default=None)

    def __bool__(self) -> bool:
        return self.valid

    def describe(self) -> str:
        if self.violation is None:
            return "valid"
        vertex, color, degree = self.violation
        return f"(vertex {vertex}, class {color}, degree {degree})"


def verify_coloring(g: Graph, col: EdgeColoring | Mapping[Edge, int]) -> VerificationReport:
    """Check that every nonempty class induces an odd subgraph

    Classes are scanned in ascending order, vertices inside a class likewise;
    the first vertex of even positive degree is reported.

    Args:
        g (Graph): The colored graph
        col (EdgeColoring | Mapping[Edge, int]): Coloring or raw edge -> color map

    Raises:
        PartialColoringError: Coloring not total over E(g)

    Returns:
        VerificationReport: Validity and first violation
    """
    if isinstance(col, EdgeColoring):
        if col.parent != g:
            raise PartialColoringError("coloring belongs to a different graph")
        assignment = col.assignment
    else:
        assignment = EdgeColoring(g, dict(col)).assignment

    degrees: dict[int, dict[int, int]] = {}
    for (u, v), c in assignment.items():
        per_class = degrees.setdefault(c, {})
        per_class[u] = per_class.get(u, 0) + 1
        per_class[v] = per_class.get(v, 0) + 1
    for c in sorted(degrees):
        for x in sorted(degrees[c]):
            d = degrees[c][x]
            if d % 2 == 0:
                return VerificationReport(False, (x, c, d))
    return VerificationReport(True)


def assert_valid(col: EdgeColoring) -> EdgeColoring:
    """Guard for constructive algorithms; an invalid result is a construction bug"""
    report = verify_coloring(col.parent, col)
    if not report:
        raise InternalFault(f"{col.provenance or 'construction'} produced an invalid coloring {report.describe()}")
    return col
