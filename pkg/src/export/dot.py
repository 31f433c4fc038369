from pathlib import Path
from typing import Mapping

from jinja2 import Environment, FileSystemLoader
from pydantic import BaseModel

from src.core.graph import Edge, Graph
from src.errors import PartialColoringError

BASE_TEMPLATE_PATH = Path(__file__).parent.resolve() / "templates"

# Fixed colors of classes 1..4; higher classes are drawn black
CLASS_COLORS = {1: "red", 2: "blue", 3: "green3", 4: "orange"}
FALLBACK_COLOR = "black"


class DotEdge(BaseModel):
    u: int
    v: int
    cls: int | None = None
    color: str | None = None


class DotContext(BaseModel):
    name: str = "G"
    provenance: str | None = None
    vertices: list[int]
    edges: list[DotEdge]


class DotExporter:
    def __init__(self, templates_path: Path = BASE_TEMPLATE_PATH):
        self.env = Environment(
            loader=FileSystemLoader(templates_path),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
        self.template = self.env.get_template("graph.dot.j2")

    def render(self, context: DotContext) -> str:
        return self.template.render(**context.model_dump())


def build_context(g: Graph, coloring: Mapping[Edge, int] | None = None, provenance: str | None = None) -> DotContext:
    if coloring is not None and set(coloring) != g.edges:
        raise PartialColoringError("coloring does not match the edges of the graph")
    edges = []
    for u, v in g.edge_list:
        if coloring is None:
            edges.append(DotEdge(u=u, v=v))
            continue
        c = coloring[(u, v)]
        edges.append(DotEdge(u=u, v=v, cls=c, color=CLASS_COLORS.get(c, FALLBACK_COLOR)))
    return DotContext(provenance=provenance, vertices=list(g.vertices()), edges=edges)


def export_dot(g: Graph, coloring: Mapping[Edge, int] | None = None, provenance: str | None = None) -> str:
    """DOT text of g, edges in ascending order, colored by class when a coloring is given"""
    return DotExporter().render(build_context(g, coloring, provenance))
