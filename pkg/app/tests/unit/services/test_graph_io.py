import json

import pytest

from app.core.errors import ParseError
from app.models.graph import Graph
from app.models.table import Move, Table
from app.services.graph_io import (
    format_graph_text,
    format_table_text,
    format_tableau,
    graph_to_json,
    load_graph,
    load_moves,
    load_table,
    move_to_json,
    parse_graph_json,
    parse_graph_text,
    parse_table_text,
    parse_tableau,
)

TABLEAU = "[1 0 1 1] - [1 1 1 1]\n[1 1 1 0]   [1 0 1 0]\n"


def test_parse_graph_text_skips_comments_and_blank_lines():
    """ Should read the vertex count and one edge per line."""
    g = parse_graph_text("# path\n3\n\n0 1\n1 2\n")
    assert g == Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("x\n", 1),
    ("3\n0 1\n0 x\n", 3),
    ("3\n0 1\n0 5\n", 3),
    ("3\n1 1\n", 2),
    ("3\n0 1 2\n", 2),
])
def test_parse_graph_text_reports_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph_text(text)
    assert info.value.line == line


def test_graph_text_and_json_agree(c5):
    assert parse_graph_text(format_graph_text(c5)) == c5
    assert parse_graph_json(graph_to_json(c5)) == c5


def test_parse_graph_json_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_graph_json('{"n": 2, "edges": [[0, 0]]}')
    with pytest.raises(ParseError):
        parse_graph_json('{"edges": []}')


def test_load_graph_detects_format(write, k3):
    assert load_graph(write("g.json", graph_to_json(k3))) == k3
    assert load_graph(write("g.txt", format_graph_text(k3))) == k3


def test_table_text():
    """ Should accumulate counts and report malformed lines."""
    t = parse_table_text("0101 2\n1111 1\n0101 1\n")
    assert t == Table.from_counts(4, {5: 3, 15: 1})
    assert format_table_text(t) == "0101 3\n1111 1\n"
    with pytest.raises(ParseError) as info:
        parse_table_text("0101 2\n111 1\n")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_table_text("0101 -1\n")


def test_load_table_json(write):
    path = write("t.json", '{"n": 3, "entries": {"011": 2}}')
    assert load_table(path) == Table.from_counts(3, {3: 2})


def test_parse_tableau():
    """ Should read the plus side left of the brackets and the minus side right."""
    m = parse_tableau(TABLEAU)
    assert m.plus == Table.from_bits(["1011", "1110"])
    assert m.minus == Table.from_bits(["1111", "1010"])


def test_format_tableau_is_parseable():
    m = parse_tableau(TABLEAU)
    text = format_tableau(m)
    assert text.splitlines()[0] == "[1 0 1 1] - [1 0 1 0]"
    assert parse_tableau(text) == m


def test_tableau_dash_only_on_first_row():
    with pytest.raises(ParseError) as info:
        parse_tableau("[1 0] - [1 1]\n[0 1] - [0 0]\n")
    assert info.value.line == 2


def test_load_moves_from_json_and_tableaux(write):
    m = Move(Table.from_bits(["1000", "0010"]), Table.from_bits(["1010", "0000"]))
    as_json = write("m.json", json.dumps([json.loads(move_to_json(m))]))
    assert load_moves(as_json) == [m]
    blocks = format_tableau(m) + "\n" + TABLEAU
    moves = load_moves(write("m.txt", blocks))
    assert moves == [m, parse_tableau(TABLEAU)]


def test_load_moves_reports_absolute_line(write):
    path = write("m.txt", TABLEAU + "\n[1 0 1 1] - [1 1 1 1]\n[1 1 1] [1 0 1 0]\n")
    with pytest.raises(ParseError) as info:
        load_moves(path)
    assert info.value.line == 5
