from unittest.mock import patch

import pytest

from app.core.errors import ParseError
from app.models.basis import WidthStatus
from app.models.run import FixtureRow
from app.services import catalog
from app.services.basis_engine import markov_basis_up_to
from app.services.table_fixture import (
    compare_row,
    fixture_graph,
    load_table_fixture,
    reproduce_table,
)

HEADER = "graph,n,edges,d2,d4,d6,d8,d10,total,width\n"


@pytest.fixture(scope="module")
def fixture():
    return load_table_fixture("app/fixtures/markov_table.csv")


def test_fixture_rows(fixture):
    assert len(fixture.rows) == 15
    k3 = fixture.row("K3")
    assert k3.counts == {4: 1}
    assert k3.width == 4
    assert fixture.row("K5").counts == {4: 260, 6: 3952, 8: 846, 10: 480}


def test_fixture_graph_matches_catalog(fixture):
    assert fixture_graph(fixture.row("C4")) == catalog.cycle(4)
    assert fixture_graph(fixture.row("K23")) == catalog.complete_bipartite(2, 3)


@pytest.mark.parametrize("body, line", [
    ("K3,3,0-1 0-2 1-2,0,1,0,0,0,1\n", 1),
    ("K3,3,0-1 0_2 1-2,0,1,0,0,0,1,4\n", 2),
    ("K3,3,0-1 0-2 1-2,0,1,0,0,0,2,4\n", 2),
    ("K3,3,0-1 0-2 1-2,0,1,0,0,0,1,6\n", 2),
])
def test_malformed_fixture(write, body, line):
    text = HEADER.replace(",width", "") if line == 1 else HEADER
    path = write("table.csv", text + body)
    with pytest.raises(ParseError) as exc:
        load_table_fixture(path)
    assert exc.value.line == line


def test_compare_row_flags_wrong_counts(k3):
    row = FixtureRow(graph="K3", n=3, edges=[(0, 1), (0, 2), (1, 2)], counts={4: 2}, total=2, width=4)
    report = markov_basis_up_to(k3, 4, bound=4)
    cmp = compare_row(row, report)
    assert cmp.status == "mismatch"
    assert cmp.computed == {2: 0, 3: 0, 4: 1}


def test_reproduce_small_rows(fixture):
    rows = reproduce_table(fixture, ["K3", "C4"])
    assert [r.graph for r in rows] == ["K3", "C4"]
    assert all(r.status == "match" and r.exact for r in rows)
    assert rows[1].computed == {2: 8, 3: 0, 4: 8}


def test_compare_row_uncertified_width_is_lower_bound(k3):
    """ Should not call agreeing counts a match when the width is only a lower bound."""
    row = FixtureRow(graph="K3", n=3, edges=[(0, 1), (0, 2), (1, 2)], counts={4: 1}, total=1, width=4)
    report = markov_basis_up_to(k3, 4, bound=4)
    report.width = WidthStatus(4, False)
    cmp = compare_row(row, report)
    assert cmp.status == "lower-bound"
    assert not cmp.exact


@patch("app.services.basis_engine.known_width_bound", return_value=None)
@patch("app.services.table_fixture.known_width_bound", return_value=None)
def test_fixture_width_is_never_a_certificate(mock_row_bound, mock_engine_bound, fixture):
    """ Should leave the width uncertified when no known bound applies, whatever the fixture says."""
    (row,) = reproduce_table(fixture, ["K3"])
    assert row.status == "lower-bound"
    assert row.exact is False
    assert row.width == 4
    mock_row_bound.assert_called_once()


def test_reproduce_out_of_budget_is_skipped(fixture):
    """ Should skip rather than fail when the monomial budget is too small."""
    (row,) = reproduce_table(fixture, ["C4"], budget=10)
    assert row.status == "skipped"
    assert row.skipped == [2, 3, 4]
    assert not row.exact


@pytest.mark.slow
@pytest.mark.parametrize("name, status, exact", [
    ("K4", "lower-bound", False),
    ("C5", "match", True),
    ("K23", "match", True),
])
def test_reproduce_larger_rows(fixture, name, status, exact):
    """ Should certify the width only where a known bound covers the graph."""
    (row,) = reproduce_table(fixture, [name])
    assert row.status == status
    assert row.exact is exact
    assert row.width == fixture.row(name).width
