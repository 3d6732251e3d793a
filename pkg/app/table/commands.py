"""
Command layer for the generator-count table.

Exposes `reproduce-table`, which recomputes the per-degree minimal generator
counts of every fixture graph within the configured budgets and diffs them
against `app/fixtures/markov_table.csv`.

Rows whose counts agree are `match` when the width is certified by a known
bound and `lower-bound` otherwise. Degrees that run out of budget mark their
row `skipped`. Neither is a failure. Any completed degree that disagrees makes the command exit
with code 1.
"""
from __future__ import annotations

import logging

import click
from pydantic import BaseModel

from app.cli.deps import Mismatch, budget_options, build_config, emit, format_option, handle_errors, out_option
from app.core.config import settings
from app.services.table_fixture import load_table_fixture, reproduce_table

logger = logging.getLogger(__name__)


class RowOut(BaseModel):
    graph: str
    status: str
    expected: dict[int, int]
    computed: dict[int, int]
    skipped: list[int]
    width: int
    exact: bool


class TableOut(BaseModel):
    rows: list[RowOut]
    matched: int
    lower_bound: int
    mismatched: int
    skipped: int


def _text(p: TableOut) -> str:
    lines = []
    for r in p.rows:
        got = ", ".join(f"{d}:{c}" for d, c in sorted(r.computed.items()) if c) or "-"
        lines.append(f"{r.graph:<6} {r.status:<11} width {'=' if r.exact else '>='}{r.width:<3} {got}")
    lines.append(f"{p.matched} match, {p.lower_bound} lower-bound, {p.mismatched} mismatch, {p.skipped} skipped")
    return "\n".join(lines) + "\n"


@click.command("reproduce-table", help="Recompute the generator-count table and diff it against the fixture.")
@click.option("--fixture", "fixture_path", type=click.Path(exists=True, dir_okay=False), default=None)
@click.option("--only", multiple=True, help="Restrict to these fixture graphs.")
@budget_options
@format_option
@out_option
@handle_errors
def reproduce_table_command(fixture_path, only, budget, fiber_budget, time_budget, fmt, out):
    config = build_config(
        "reproduce-table", budget=budget, fiber_budget=fiber_budget, time_budget=time_budget, fmt=fmt, out=out,
    )
    fixture = load_table_fixture(fixture_path or settings.TABLE_FIXTURE_PATH)
    rows = reproduce_table(fixture, list(only) or None, budget=config.monomial_budget, deadline=config.deadline())
    payload = TableOut(
        rows=[RowOut(**vars(r)) for r in rows],
        matched=sum(r.status == "match" for r in rows),
        lower_bound=sum(r.status == "lower-bound" for r in rows),
        mismatched=sum(r.status == "mismatch" for r in rows),
        skipped=sum(r.status == "skipped" for r in rows),
    )
    emit(config, payload, _text)
    if payload.mismatched:
        raise Mismatch(", ".join(r.graph for r in rows if r.status == "mismatch"))
