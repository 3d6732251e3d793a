"""
Command layer for the structural classifier.

Exposes `classify`, which proposes minimal generators of one degree from the
graph's structure instead of brute-force fiber search:

- `pullback` (any degree up to MAX_FUNDAMENTAL_DEGREE): pullbacks of the
  distinguished generator of the fundamental graph through minors.
- `partition` (degree 2): one quadric per admissible vertex partition.
- `coloring` (degree 3): one cubic per pair of 3-coloring components of a
  3-rigid minor.

With --certify each candidate is checked against the fibers of its degree.
"""
from __future__ import annotations

import logging

import click
from pydantic import BaseModel

from app.cli.deps import (
    budget_options,
    build_config,
    checked_moves,
    emit,
    format_option,
    graph_option,
    handle_errors,
    out_option,
    resolve_graph,
)
from app.models.classifier import GeneratorCandidate
from app.services.classifier import (
    certify_candidates,
    degree2_candidates,
    degree3_generators,
    pullback_candidates,
)
from app.services.colorings import is_3rigid

logger = logging.getLogger(__name__)


class CandidateOut(BaseModel):
    plus: list[str]
    minus: list[str]
    provenance: str
    minimal: bool | None = None


class ClassifyOut(BaseModel):
    degree: int
    method: str
    three_rigid: bool | None = None
    truncated: bool = False
    candidates: list[CandidateOut]


def _default_method(degree: int) -> str:
    return {2: "partition", 3: "coloring"}.get(degree, "pullback")


def _describe(c: GeneratorCandidate) -> str:
    p = c.provenance
    if p.kind == "partition":
        return f"partition V1={sorted(p.v1)} V2={sorted(p.v2)} V3={sorted(p.v3)}"
    steps = " ".join(f"{s.kind}{list(s.vertices)}" for s in p.trace.steps) or "identity"
    if p.kind == "coloring":
        return f"coloring {steps}: {p.base} vs {p.other}"
    return f"pullback {steps}: phi={list(p.homomorphism)}"


@click.command("classify", help="Structural generator candidates of one degree.")
@graph_option
@click.option("--degree", type=int, required=True)
@click.option("--method", type=click.Choice(["pullback", "partition", "coloring"]), default=None)
@click.option("--certify/--no-certify", default=True, show_default=True)
@budget_options
@format_option
@out_option
@handle_errors
def classify_command(graph_path, degree, method, certify, budget, fiber_budget, time_budget, fmt, out):
    config = build_config(
        "classify", graph_path=graph_path, dmax=degree, budget=budget,
        fiber_budget=fiber_budget, time_budget=time_budget, fmt=fmt, out=out,
    )
    g = resolve_graph(graph_path)
    method = method or _default_method(degree)
    if method == "partition" and degree != 2:
        raise click.UsageError("the partition construction gives degree-2 moves only")
    if method == "coloring" and degree != 3:
        raise click.UsageError("the coloring construction gives degree-3 moves only")

    truncated = False
    rigid = None
    if method == "partition":
        candidates = degree2_candidates(g)
    elif method == "coloring":
        rigid = is_3rigid(g)
        candidates = degree3_generators(g, certify=certify)
    else:
        result = pullback_candidates(g, degree, certify=certify)
        candidates, truncated = list(result.candidates), result.truncated
    if certify and method == "partition":
        candidates = certify_candidates(g, degree, candidates)

    checked_moves(g, (c.move for c in candidates))
    payload = ClassifyOut(
        degree=degree,
        method=method,
        three_rigid=rigid,
        truncated=truncated,
        candidates=[
            CandidateOut(plus=c.move.plus.rows(), minus=c.move.minus.rows(), provenance=_describe(c), minimal=c.minimal)
            for c in candidates
        ],
    )
    logger.info(f"{g}: {len(candidates)} {method} candidates at degree {degree}")
    emit(config, payload)
