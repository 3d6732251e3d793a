"""
Command layer for the marginal map.

This module exposes the `matrix` command, which prints the marginal matrix
A_G of a graph together with its rank and the dimension of the model polytope.

Key responsibilities include:
- Building A_G with the documented row and column order.
- Reporting rank(A_G) and dim P_G = rank - 1 (equal to |V| + |E|).
- Optionally checking which coordinate inequalities define facets (forests only).
"""
from __future__ import annotations

import logging

import click
import numpy as np
from pydantic import BaseModel

from app.cli.deps import build_config, emit, format_option, graph_option, handle_errors, out_option, resolve_graph
from app.models.table import cell_bits
from app.services.graph_ops import is_forest
from app.services.marginals import claimed_facet_is_facet, marginal_matrix, row_labels

logger = logging.getLogger(__name__)


class MatrixRow(BaseModel):
    label: str
    entries: str
    facet: bool | None = None


class MatrixOut(BaseModel):
    n: int
    edges: list[tuple[int, int]]
    columns: list[str]
    rank: int
    dimension: int
    rows: list[MatrixRow]


def matrix_text(payload: MatrixOut) -> str:
    width = max((len(r.label) for r in payload.rows), default=0)
    lines = [f"{r.label:<{width}}  {r.entries}" for r in payload.rows]
    lines.append(f"rank {payload.rank}, dimension {payload.dimension}")
    return "\n".join(lines) + "\n"


@click.command("matrix", help="Print the marginal matrix A_G.")
@graph_option
@click.option("--facets", is_flag=True, help="Check each coordinate inequality for being a facet (forests).")
@format_option
@out_option
@handle_errors
def matrix_command(graph_path: str, facets: bool, fmt: str | None, out: str | None):
    """
    Build A_G for the given graph.

    Raises:
        CapabilityError: If the graph exceeds MAX_MATRIX_VERTICES, or --facets
            is used on a graph with a cycle.
    """
    config = build_config("matrix", graph_path=graph_path, fmt=fmt, out=out)
    g = resolve_graph(graph_path)
    a = marginal_matrix(g)
    rank = int(np.linalg.matrix_rank(a))
    check = facets and is_forest(g)
    if facets and not check:
        logger.warning(f"{g} is not a forest; facet check skipped")
    rows = [
        MatrixRow(
            label=label,
            entries="".join(str(int(x)) for x in a[i]),
            facet=claimed_facet_is_facet(g, i) if check else None,
        )
        for i, label in enumerate(row_labels(g))
    ]
    h, _ = g.relabeled()
    payload = MatrixOut(
        n=g.n,
        edges=list(h.sorted_edges),
        columns=[cell_bits(c, g.n) for c in range(1 << g.n)],
        rank=rank,
        dimension=rank - 1,
        rows=rows,
    )
    emit(config, payload, matrix_text)
