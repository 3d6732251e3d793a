"""
Command layer for forest degrees.

Exposes `forest-degree`, which prints the exact degree of the toric ideal of a
forest. With --oracle the value is cross-checked by counting maximal simplices
of the pulling triangulation; with --series N the path degrees d_1..d_N are
printed together with the generating-function check.
"""
from __future__ import annotations

import logging
from fractions import Fraction

import click
from pydantic import BaseModel

from app.cli.deps import Mismatch, build_config, emit, format_option, handle_errors, out_option, resolve_graph
from app.services.forest_degree import chain_degrees, forest_degree, gf_check, tangent_series
from app.services.volume_oracle import degree_oracle

logger = logging.getLogger(__name__)


class SeriesTerm(BaseModel):
    n: int
    degree: int
    coefficient: str


class ForestDegreeOut(BaseModel):
    degree: int | None = None
    oracle: int | None = None
    series: list[SeriesTerm] = []
    series_ok: bool | None = None


def _text(p: ForestDegreeOut) -> str:
    lines = []
    if p.degree is not None:
        lines.append(str(p.degree))
    if p.oracle is not None:
        lines.append(f"oracle {p.oracle}")
    lines += [f"d_{t.n} = {t.degree}  [{t.coefficient}]" for t in p.series]
    if p.series_ok is not None:
        lines.append(f"generating function: {'ok' if p.series_ok else 'MISMATCH'}")
    return "\n".join(lines) + "\n"


@click.command("forest-degree", help="Degree of the toric ideal of a forest.")
@click.option("--graph", "graph_path", default=None, help="Forest file or catalog name.")
@click.option("--oracle", is_flag=True, help="Cross-check with the clique-counting oracle.")
@click.option("--series", type=int, default=None, help="Also print path degrees d_1..d_N.")
@format_option
@out_option
@handle_errors
def forest_degree_command(graph_path, oracle, series, fmt, out):
    if graph_path is None and series is None:
        raise click.UsageError("give --graph, --series or both")
    config = build_config("forest-degree", graph_path=graph_path, fmt=fmt, out=out)
    payload = ForestDegreeOut()
    if graph_path is not None:
        g = resolve_graph(graph_path)
        payload.degree = forest_degree(g)
        if oracle:
            payload.oracle = degree_oracle(g)
    if series is not None:
        coeffs = tangent_series(series)
        payload.series = [
            SeriesTerm(n=n, degree=d, coefficient=str(Fraction(coeffs.coefficient(n))))
            for n, d in enumerate(chain_degrees(series), start=1)
        ]
        payload.series_ok = gf_check(series)
    emit(config, payload, _text)
    if payload.oracle is not None and payload.oracle != payload.degree:
        raise Mismatch(f"recursion gives {payload.degree}, oracle gives {payload.oracle}")
    if payload.series_ok is False:
        raise Mismatch("path degrees disagree with the generating function")
