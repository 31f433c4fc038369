import pytest

from src.coloring.constructions import odd3_dominating_even
from src.errors import PartialColoringError
from src.export.dot import CLASS_COLORS, build_context, export_dot
from src.generators.families import wheel


def edge_lines(text: str) -> list[str]:
    return [line.strip() for line in text.splitlines() if "--" in line]


def test_plain_triangle(triangle):
    text = export_dot(triangle)
    assert text.startswith("graph G {")
    assert text.rstrip().endswith("}")
    assert edge_lines(text) == ["0 -- 1;", "0 -- 2;", "1 -- 2;"]
    assert "color=" not in text


def test_colored_square(square):
    text = export_dot(square, {(0, 1): 1, (1, 2): 2, (2, 3): 1, (0, 3): 2}, provenance="alternating")
    lines = edge_lines(text)
    assert lines[0] == '0 -- 1 [color="red", label="1"];'
    assert {line.split('"')[1] for line in lines} == {CLASS_COLORS[1], CLASS_COLORS[2]}
    assert 'label="alternating";' in text


def test_wheel_coloring_uses_three_colors():
    g = wheel(6)
    col = odd3_dominating_even(g)
    lines = edge_lines(export_dot(g, col.assignment))
    assert len(lines) == 12
    assert len({line.split('"')[1] for line in lines}) == 3


def test_high_classes_fall_back_to_black(path3):
    context = build_context(path3, {(0, 1): 5, (1, 2): 6})
    assert {e.color for e in context.edges} == {"black"}


def test_coloring_must_match_graph(path3):
    with pytest.raises(PartialColoringError):
        export_dot(path3, {(0, 1): 1})
