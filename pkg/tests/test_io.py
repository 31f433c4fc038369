import pytest

from src.core.graph import Graph
from src.core.io import format_coloring, format_graph, parse_coloring, parse_graph, read_coloring, read_graph
from src.errors import ParseError


def test_parse_with_header_and_comments():
    g = parse_graph("# a path\nn 5\n\n0 1\n2 1\n")
    assert g.vertex_count == 5
    assert g.edge_list == ((0, 1), (1, 2))


def test_vertex_count_without_header():
    assert parse_graph("3 0\n").vertex_count == 4
    assert parse_graph("").vertex_count == 0


@pytest.mark.parametrize(
    "text, line",
    [
        ("0 1\n1 1\n", 2),
        ("0 1\n1 0\n", 2),
        ("0 1\n0 x\n", 2),
        ("0 1 2\n", 1),
        ("n 2\n0 2\n", 2),
        ("n 3\nn 3\n", 2),
        ("# c\n0 -1\n", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}: ")


def test_format_graph(triangle):
    assert format_graph(triangle) == "n 3\n0 1\n0 2\n1 2\n"
    assert parse_graph(format_graph(Graph(4, [(2, 3)]))) == Graph(4, [(2, 3)])


def test_read_graph(tmp_path):
    path = tmp_path / "k2.txt"
    path.write_text("0 1\n")
    assert read_graph(path) == Graph(2, [(0, 1)])


@pytest.mark.parametrize("read", [read_graph, read_coloring])
def test_binary_file_is_a_parse_error(tmp_path, read):
    path = tmp_path / "binary.txt"
    path.write_bytes(b"\xff\xfe\x00\x01")
    with pytest.raises(ParseError, match="not a text file"):
        read(path)


def test_parse_coloring():
    assert parse_coloring("# provenance tree\n1 0 2\n1 2 1\n") == {(0, 1): 2, (1, 2): 1}
    assert format_coloring({(1, 2): 1, (0, 1): 2}) == "0 1 2\n1 2 1\n"


@pytest.mark.parametrize("text", ["0 1\n", "0 1 0\n", "0 1 1\n1 0 2\n", "2 2 1\n"])
def test_coloring_parse_errors(text):
    with pytest.raises(ParseError):
        parse_coloring(text)
