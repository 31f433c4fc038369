# Text formats
# ============
#
# Edge list: one edge per line as two whitespace separated nonnegative
# integers. Lines starting with '#' and blank lines are ignored. A header
# line "n <count>" fixes the vertex count; without it the count is
# 1 + the largest index.
#
# Coloring: one line per edge, "u v c" with c a positive color.

from pathlib import Path
from typing import Mapping

from src.core.graph import Edge, Graph
from src.errors import ParseError


def _data_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def _nonnegative(token: str, number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", number) from None
    if value < 0:
        raise ParseError(f"negative value {value}", number)
    return value


def parse_graph(text: str) -> Graph:
    header: int | None = None
    edges: list[Edge] = []
    seen: set[Edge] = set()
    largest = -1
    for number, fields in _data_lines(text):
        if fields[0] == "n":
            if len(fields) != 2:
                raise ParseError("header must be 'n <count>'", number)
            if header is not None:
                raise ParseError("repeated header", number)
            header = _nonnegative(fields[1], number)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected two vertices, got {len(fields)} fields", number)
        u, v = (_nonnegative(x, number) for x in fields)
        if u == v:
            raise ParseError(f"loop at vertex {u}", number)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParseError(f"repeated edge {u} {v}", number)
        if header is not None and max(e) >= header:
            raise ParseError(f"vertex {max(e)} exceeds declared count {header}", number)
        seen.add(e)
        edges.append(e)
        largest = max(largest, e[1])
    if header is not None and largest >= header:
        raise ParseError(f"vertex {largest} exceeds declared count {header}")
    return Graph(header if header is not None else largest + 1, edges)


def format_graph(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


def _read_text(path: Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise ParseError(f"not a text file: {e.reason} at byte {e.start}") from None


def read_graph(path: Path) -> Graph:
    return parse_graph(_read_text(path))


def parse_coloring(text: str) -> dict[Edge, int]:
    """Edge -> color mapping; totality against a graph is checked by the coloring itself"""
    assignment: dict[Edge, int] = {}
    for number, fields in _data_lines(text):
        if len(fields) != 3:
            raise ParseError(f"expected 'u v c', got {len(fields)} fields", number)
        u, v, c = (_nonnegative(x, number) for x in fields)
        if c == 0:
            raise ParseError("colors start at 1", number)
        if u == v:
            raise ParseError(f"loop at vertex {u}", number)
        e = (min(u, v), max(u, v))
        if e in assignment:
            raise ParseError(f"edge {u} {v} colored twice", number)
        assignment[e] = c
    return assignment


def format_coloring(assignment: Mapping[Edge, int]) -> str:
    return "".join(f"{u} {v} {assignment[(u, v)]}\n" for u, v in sorted(assignment))


def read_coloring(path: Path) -> dict[Edge, int]:
    return parse_coloring(_read_text(path))
