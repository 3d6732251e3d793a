"""
Command layer for Markov bases.

This module exposes the commands that compute, check and use Markov bases:

- `basis`: minimal generators of every degree up to --dmax.
- `width`: the Markov width implied by those generators, exact or a lower bound.
- `verify`: whether a move file connects every fiber up to --dmax, or one
  given fiber (with its size).
- `sample`: a seeded random walk through the fiber of a starting table.

Architecture notes:
- Every emitted move is re-checked with the marginal test before writing.
- When a degree or fiber runs out of budget, the partial result is written
  with `"partial": true` and the command exits with code 3.
"""
from __future__ import annotations

import logging

import click
from pydantic import BaseModel

from app.cli.deps import (
    Mismatch,
    budget_options,
    build_config,
    checked_moves,
    emit,
    format_option,
    graph_option,
    handle_errors,
    moves_as_tableaux,
    out_option,
    resolve_graph,
)
from app.core.errors import BudgetExceeded
from app.models.basis import BasisReport
from app.models.graph import Graph
from app.services.basis_engine import markov_basis_up_to
from app.services.fibers import enumerate_fiber
from app.services.graph_io import load_moves, load_table
from app.services.marginals import marginals_of
from app.services.sampler import random_walk
from app.services.verification import verify_markov_basis, verify_up_to_degree

logger = logging.getLogger(__name__)


class MoveOut(BaseModel):
    plus: list[str]
    minus: list[str]


class DegreeOut(BaseModel):
    count: int
    reps: list[MoveOut]
    fibers: int
    status: str
    reason: str | None = None


class GraphOut(BaseModel):
    n: int
    edges: list[tuple[int, int]]


class WidthOut(BaseModel):
    value: int
    exact: bool


class BasisOut(BaseModel):
    graph: GraphOut
    partial: bool
    width: WidthOut
    degrees: dict[str, DegreeOut]


class WidthReportOut(BaseModel):
    value: int
    exact: bool
    counts: dict[int, int]
    partial: bool


class DegreeCheckOut(BaseModel):
    degree: int
    fibers: int
    disconnected: int
    status: str
    pair: list[list[str]] | None = None
    reason: str | None = None


class FiberCheckOut(BaseModel):
    status: str
    size: int
    longest_path: int = 0
    pair: list[list[str]] | None = None
    reason: str | None = None


class VerifyOut(BaseModel):
    moves: int
    connected: bool
    partial: bool
    degrees: list[DegreeCheckOut] = []
    fiber: FiberCheckOut | None = None


class VisitOut(BaseModel):
    table: list[str]
    count: int


class SampleOut(BaseModel):
    start: list[str]
    final: list[str]
    steps: int
    accepted: int
    rejected: int
    distinct: int
    fiber_size: int | None = None
    visits: list[VisitOut]


def _basis_payload(g: Graph, report: BasisReport) -> BasisOut:
    h, _ = g.relabeled()
    checked_moves(g, report.moves())
    return BasisOut(
        graph=GraphOut(n=g.n, edges=list(h.sorted_edges)),
        partial=report.partial,
        width=WidthOut(value=report.width.value, exact=report.width.exact),
        degrees={
            str(d): DegreeOut(
                count=r.count,
                reps=[MoveOut(plus=m.plus.rows(), minus=m.minus.rows()) for m in r.representatives],
                fibers=r.fibers,
                status=r.status,
                reason=r.reason,
            )
            for d, r in sorted(report.per_degree.items())
        },
    )


def _raise_if_partial(report: BasisReport) -> None:
    if report.partial:
        done = sum(1 for r in report.per_degree.values() if r.status == "complete")
        raise BudgetExceeded("some degrees were skipped", count=done, partial=report)


@click.command("basis", help="Minimal generators of every degree up to --dmax.")
@graph_option
@click.option("--dmax", type=int, required=True)
@click.option("--bound", type=int, default=None, help="Externally justified width bound.")
@budget_options
@format_option
@out_option
@handle_errors
def basis_command(graph_path, dmax, bound, budget, fiber_budget, time_budget, fmt, out):
    config = build_config(
        "basis", graph_path=graph_path, dmax=dmax, bound=bound, budget=budget,
        fiber_budget=fiber_budget, time_budget=time_budget, fmt=fmt, out=out,
    )
    g = resolve_graph(graph_path)
    report = markov_basis_up_to(g, dmax, bound=bound, budget=config.monomial_budget, deadline=config.deadline())
    emit(config, _basis_payload(g, report), lambda p: moves_as_tableaux(report.moves()))
    _raise_if_partial(report)


@click.command("width", help="Markov width, exact when certified.")
@graph_option
@click.option("--dmax", type=int, required=True)
@click.option("--bound", type=int, default=None, help="Externally justified width bound.")
@budget_options
@format_option
@out_option
@handle_errors
def width_command(graph_path, dmax, bound, budget, fiber_budget, time_budget, fmt, out):
    config = build_config(
        "width", graph_path=graph_path, dmax=dmax, bound=bound, budget=budget,
        fiber_budget=fiber_budget, time_budget=time_budget, fmt=fmt, out=out,
    )
    g = resolve_graph(graph_path)
    report = markov_basis_up_to(g, dmax, bound=bound, budget=config.monomial_budget, deadline=config.deadline())
    payload = WidthReportOut(
        value=report.width.value, exact=report.width.exact, counts=report.counts, partial=report.partial,
    )
    emit(config, payload, lambda p: f"{'=' if p.exact else '>='} {p.value}\n")
    _raise_if_partial(report)


@click.command("verify", help="Check that a move file is a Markov basis.")
@graph_option
@click.option("--moves", "moves_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--dmax", type=int, default=None, help="Check every fiber of degree 2..dmax.")
@click.option("--table", "table_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Check only the fiber of this table.")
@budget_options
@format_option
@out_option
@handle_errors
def verify_command(graph_path, moves_path, dmax, table_path, budget, fiber_budget, time_budget, fmt, out):
    if (dmax is None) == (table_path is None):
        raise click.UsageError("give exactly one of --dmax and --table")
    config = build_config(
        "verify", graph_path=graph_path, dmax=dmax, budget=budget,
        fiber_budget=fiber_budget, time_budget=time_budget, fmt=fmt, out=out,
    )
    g = resolve_graph(graph_path)
    moves = load_moves(moves_path)

    if table_path is not None:
        start = load_table(table_path, g.n)
        (verdict,) = verify_markov_basis(g, moves, [marginals_of(g, start)], cap=config.fiber_budget)
        fiber = FiberCheckOut(
            status=verdict.status,
            size=verdict.size,
            longest_path=max((len(p) for p in verdict.paths.values()), default=0),
            pair=[t.rows() for t in verdict.pair] if verdict.pair else None,
            reason=verdict.reason,
        )
        payload = VerifyOut(
            moves=len(moves), connected=verdict.status == "connected",
            partial=verdict.status == "skipped", fiber=fiber,
        )
    else:
        checks = verify_up_to_degree(g, moves, dmax, budget=config.monomial_budget)
        payload = VerifyOut(
            moves=len(moves),
            connected=all(c.connected for c in checks),
            partial=any(c.status == "skipped" for c in checks),
            degrees=[
                DegreeCheckOut(
                    degree=c.degree, fibers=c.fibers, disconnected=c.disconnected, status=c.status,
                    pair=[t.rows() for t in c.pair] if c.pair else None, reason=c.reason,
                )
                for c in checks
            ],
        )
    emit(config, payload)
    if payload.partial and not any(d.disconnected for d in payload.degrees):
        raise BudgetExceeded("verification incomplete", count=len(payload.degrees), partial=payload)
    if not payload.connected:
        raise Mismatch("the moves do not connect every fiber")


@click.command("sample", help="Seeded random walk through the fiber of a table.")
@graph_option
@click.option("--moves", "moves_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--start", "start_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--steps", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--fiber-size", is_flag=True, help="Also enumerate the fiber and report its size.")
@click.option("--fiber-budget", type=int, default=None)
@format_option
@out_option
@handle_errors
def sample_command(graph_path, moves_path, start_path, steps, seed, fiber_size, fiber_budget, fmt, out):
    config = build_config(
        "sample", graph_path=graph_path, seed=seed, fiber_budget=fiber_budget, fmt=fmt, out=out,
    )
    g = resolve_graph(graph_path)
    moves = checked_moves(g, load_moves(moves_path))
    start = load_table(start_path, g.n)
    walk = random_walk(g, moves, start, steps, config.seed)
    size = None
    if fiber_size:
        size = len(enumerate_fiber(g, marginals_of(g, start), cap=config.fiber_budget))
    payload = SampleOut(
        start=start.rows(),
        final=walk.final.rows(),
        steps=walk.steps,
        accepted=walk.accepted,
        rejected=walk.rejected,
        distinct=len(walk.visits),
        fiber_size=size,
        visits=[VisitOut(table=t.rows(), count=k) for t, k in sorted(walk.visits.items())],
    )
    emit(config, payload)
