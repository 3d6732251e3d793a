"""
Command layer for the special families.

- `reduce`: build a connectivity certificate between two tables of one fiber
  of C_n or K_{2,n}, using moves of degree 2 and 4 only.
- `replay`: re-validate a certificate file against a graph.
- `witness`: write the high-degree witness move of K_m or K_{m,N}.
"""
from __future__ import annotations

import logging

import click
from pydantic import BaseModel

from app.cli.deps import (
    Mismatch,
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
from app.services.bipartite import k2n_reduce
from app.services.catalog import complete
from app.services.certificates import certificate_to_model, load_certificate, replay_certificate
from app.services.cycles import cycle_reduce
from app.services.graph_io import format_graph_text, load_table
from app.services.witnesses import km_witness, kmn_witness

logger = logging.getLogger(__name__)


class ReplayOut(BaseModel):
    valid: bool
    length: int
    reason: str | None = None


class WitnessOut(BaseModel):
    graph: str
    degree: int
    plus: list[str]
    minus: list[str]


@click.command("reduce", help="Connectivity certificate for two tables of C_n or K_(2,n).")
@click.option("--family", type=click.Choice(["cycle", "k2n"]), required=True)
@click.option("--n", "size", type=int, required=True)
@click.option("--start", "start_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--end", "end_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--fiber-budget", type=int, default=None)
@out_option
@handle_errors
def reduce_command(family, size, start_path, end_path, fiber_budget, out):
    config = build_config("reduce", fiber_budget=fiber_budget, fmt="json", out=out)
    width = size if family == "cycle" else size + 2
    t1, t2 = load_table(start_path, width), load_table(end_path, width)
    reducer = cycle_reduce if family == "cycle" else k2n_reduce
    cert = reducer(size, t1, t2, cap=config.fiber_budget)
    emit(config, certificate_to_model(cert))


@click.command("replay", help="Re-validate a certificate file.")
@graph_option
@click.option("--certificate", "cert_path", required=True, type=click.Path(exists=True, dir_okay=False))
@format_option
@out_option
@handle_errors
def replay_command(graph_path, cert_path, fmt, out):
    config = build_config("replay", graph_path=graph_path, fmt=fmt, out=out)
    g = resolve_graph(graph_path)
    verdict = replay_certificate(g, load_certificate(cert_path))
    emit(config, ReplayOut(valid=verdict.valid, length=verdict.length, reason=verdict.reason))
    if not verdict.valid:
        raise Mismatch(verdict.reason)


@click.command("witness", help="High-degree witness move of K_m or K_(m,N).")
@click.option("--family", type=click.Choice(["km", "kmn"]), required=True)
@click.option("--m", "m", type=int, required=True)
@format_option
@out_option
@handle_errors
def witness_command(family, m, fmt, out):
    config = build_config("witness", fmt=fmt, out=out)
    if family == "km":
        g, move = complete(m), km_witness(m)
    else:
        g, move = kmn_witness(m)
    (move,) = checked_moves(g, [move])
    payload = WitnessOut(
        graph=format_graph_text(g), degree=move.degree, plus=move.plus.rows(), minus=move.minus.rows(),
    )
    emit(config, payload, lambda p: moves_as_tableaux([move]))
