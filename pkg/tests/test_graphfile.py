import pytest
from hypothesis import given, settings

from brute import FIGURE1_TRANSVERSAL, bilateral_graphs, figure1_graph, general_graphs, load_fixture
from tripack.graph import TripartiteGraph
from tripack.graphfile import (
    GraphSemanticError,
    GraphSyntaxError,
    parse_edge_list,
    parse_graph,
    parse_triangle_list,
    serialize_graph,
)

FIXTURE_NAMES = ["figure1.graph", "k222.graph", "empty.graph", "one_complete_side.graph",
                 "apex_c.graph"]


def test_figure1_fixture():
    assert load_fixture("figure1.graph") == figure1_graph()


def test_empty_fixture():
    assert load_fixture("empty.graph") == TripartiteGraph()


def test_undeclared_parts_are_empty():
    assert parse_graph("# nothing\n\n") == TripartiteGraph()


def test_whitespace_and_comments():
    text = "  A :0 1   # apex\nB: 2\nC: 3\nAB: complete\nAC:complete\nBC: 2 - 3\n"
    g = parse_graph(text)
    assert g == TripartiteGraph.bilateral([0, 1], [2], [3], [(2, 3)])


def test_side_over_several_lines():
    g = parse_graph("A: 0\nB: 1 2\nC: 3\nBC: 1-3\nBC: 2-3\n")
    assert g.bc == ((1, 3), (2, 3))


def test_backwards_edge_is_oriented():
    assert parse_graph("A: 0\nB: 1\nC: 2\nAB: 1-0\n").ab == ((0, 1),)


@pytest.mark.parametrize("text, fragment", [
    ("A: 0\nB: 2 3\nC: 4\nBC: 2-3\n", "both endpoints in part B"),
    ("A: 0\nB: 0\n", "part A and part B"),
    ("A: 0 0\n", "listed twice"),
    ("A: 0\nB: 1\nC: 2\nAB: 0-1 1-0\n", "duplicate edge"),
    ("A: 0\nB: 1\nC: 2\nAB: 0-7\n", "undeclared vertex 7"),
    ("A: 0\nB: 1\nC: 2\nAB: 0-2\n", "not side AB"),
    ("A: 0\nB: 1\nC: 2\nAB: complete 0-1\n", "mixes"),
    ("A: 0\nB: 1\nC: 2\nAB: 0-1\nAB: complete\n", "mixes"),
    ("A: 0\nA: 1\n", "declared twice"),
])
def test_semantic_errors(text, fragment):
    with pytest.raises(GraphSemanticError, match=fragment):
        parse_graph(text)


@pytest.mark.parametrize("text, line, column", [
    ("A: 0\nD: 1\n", 2, 1),
    ("A: 0\nB 1\n", 2, 1),
    ("A: 0 x\n", 1, 6),
    ("A: 0\nB: 1\nC: 2\nBC:  1-2 1+2\n", 4, 10),
])
def test_syntax_errors_carry_position(text, line, column):
    with pytest.raises(GraphSyntaxError) as err:
        parse_graph(text)
    assert (err.value.line, err.value.column) == (line, column)
    assert f"line {line}, column {column}" in str(err.value)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_round_trip(name):
    g = load_fixture(name)
    assert parse_graph(serialize_graph(g)) == g


@settings(max_examples=100, deadline=None)
@given(general_graphs(max_size=4))
def test_round_trip_general(g):
    assert parse_graph(serialize_graph(g, "a comment\n\nover lines")) == g


@settings(max_examples=50, deadline=None)
@given(bilateral_graphs())
def test_serialize_uses_complete_flag(g):
    text = serialize_graph(g)
    if g.ab:
        assert "AB: complete" in text
    assert parse_graph(text) == g


def test_certificate_lists():
    assert parse_edge_list("0-2 1-2\n# x\n0 - 9 1-9 3-8\n") == [
        (0, 2), (1, 2), (0, 9), (1, 9), (3, 8)]
    assert parse_edge_list("0-2 0-9\n1-2 1-9 3-8") == list(FIGURE1_TRANSVERSAL)
    assert parse_triangle_list("0-2-6\n1-2-7  # two\n") == [(0, 2, 6), (1, 2, 7)]
    with pytest.raises(GraphSyntaxError):
        parse_edge_list("0-2-6")
    with pytest.raises(GraphSyntaxError):
        parse_triangle_list("0-2")
