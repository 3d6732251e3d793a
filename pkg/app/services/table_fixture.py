"""
Loading the generator-count fixture and comparing computed counts against it.

The fixture is a CSV file with one row per graph:

    graph,n,edges,d2,d4,d6,d8,d10,total,width

`edges` is a space-separated list of 0-based `u-v` pairs. Degrees missing from
the columns (the odd ones) are expected to have no minimal generators.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

import pandas as pd
from pydantic import ValidationError

from app.core.config import settings
from app.core.errors import ParseError
from app.models.basis import BasisReport
from app.models.graph import Graph
from app.models.run import FixtureRow, TableFixture
from app.services.basis_engine import known_width_bound, markov_basis_up_to

logger = logging.getLogger(__name__)

DEGREE_COLUMNS = {"d2": 2, "d4": 4, "d6": 6, "d8": 8, "d10": 10}


def _parse_edges(text: str, line: int) -> list[tuple[int, int]]:
    edges = []
    for pair in str(text).split():
        try:
            u, v = pair.split("-")
            edges.append((int(u), int(v)))
        except ValueError:
            raise ParseError(f"bad edge {pair!r}", line=line)
    return edges


def load_table_fixture(path: str | Path | None = None) -> TableFixture:
    """
    Read and validate the fixture CSV.

    Raises:
        ParseError: On missing columns, bad edges or inconsistent totals; the
            line number counts the header as line 1.
    """
    path = Path(path or settings.TABLE_FIXTURE_PATH)
    frame = pd.read_csv(path, dtype={"graph": str, "edges": str})
    missing = {"graph", "n", "edges", "total", "width", *DEGREE_COLUMNS} - set(frame.columns)
    if missing:
        raise ParseError(f"fixture lacks columns {sorted(missing)}", line=1)
    rows = []
    for i, rec in enumerate(frame.to_dict(orient="records"), start=2):
        try:
            rows.append(FixtureRow(
                graph=rec["graph"],
                n=int(rec["n"]),
                edges=_parse_edges(rec["edges"], i),
                counts={d: int(rec[c]) for c, d in DEGREE_COLUMNS.items() if int(rec[c])},
                total=int(rec["total"]),
                width=int(rec["width"]),
            ))
        except ValidationError as exc:
            raise ParseError(exc.errors()[0]["msg"], line=i)
    logger.info(f"loaded {len(rows)} fixture rows from {path}")
    return TableFixture(rows=rows)


def fixture_graph(row: FixtureRow) -> Graph:
    return Graph.from_edges(row.n, row.edges)


@dataclass
class RowComparison:
    """
    Computed counts of one fixture graph next to the expected ones.

    Attributes:
        graph (str): Fixture name.
        status (str): `match` when the counts agree and the width is certified,
            `lower-bound` when the counts agree but only a lower bound on the
            width is known, `mismatch`, or `skipped` (some degree out of budget
            and no completed degree disagreeing).
        expected (dict[int, int]): Fixture counts.
        computed (dict[int, int]): Counts of the completed degrees.
        skipped (list[int]): Degrees that did not complete.
        width (int): Computed width (lower bound unless `exact`).
        exact (bool): Whether the width is certified.
    """
    graph: str
    status: Literal["match", "lower-bound", "mismatch", "skipped"]
    expected: dict[int, int]
    computed: dict[int, int]
    skipped: list[int] = field(default_factory=list)
    width: int = 0
    exact: bool = False


def compare_row(row: FixtureRow, report: BasisReport) -> RowComparison:
    computed = report.counts
    skipped = [d for d, r in sorted(report.per_degree.items()) if r.status == "skipped"]
    wrong = [d for d, c in computed.items() if row.counts.get(d, 0) != c]
    if wrong:
        status = "mismatch"
        logger.error(f"{row.graph}: degrees {wrong} disagree with the fixture")
    elif skipped:
        status = "skipped"
    elif report.width.value != row.width:
        status = "mismatch"
        logger.error(f"{row.graph}: width {report.width.value} disagrees with the fixture")
    else:
        status = "match" if report.width.exact else "lower-bound"
    return RowComparison(
        graph=row.graph,
        status=status,
        expected=dict(row.counts),
        computed=computed,
        skipped=skipped,
        width=report.width.value,
        exact=report.width.exact,
    )


def reproduce_row(
    row: FixtureRow,
    budget: int | None = None,
    deadline: float | None = None,
) -> RowComparison:
    """
    Compute minimal generators of every degree up to the fixture width and
    compare. The width is certified only by a known bound for the graph; the
    fixture's own width never is, so other rows end in `lower-bound`.
    """
    g = fixture_graph(row)
    report = markov_basis_up_to(g, row.width, bound=known_width_bound(g), budget=budget, deadline=deadline)
    return compare_row(row, report)


def reproduce_table(
    fixture: TableFixture,
    names: list[str] | None = None,
    budget: int | None = None,
    deadline: float | None = None,
) -> list[RowComparison]:
    rows = [r for r in fixture.rows if names is None or r.graph in names]
    out = [reproduce_row(r, budget=budget, deadline=deadline) for r in rows]
    summary = {s: sum(1 for c in out if c.status == s) for s in ("match", "lower-bound", "mismatch", "skipped")}
    logger.info(f"table reproduction: {summary}")
    return out
