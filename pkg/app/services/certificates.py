"""
Connectivity certificates: replaying them and reading/writing them as JSON.

The cycle and K_{2,n} procedures build certificates by moving the two tables
towards a shared cell, dividing it out and repeating on what is left. This
module holds what they share: the fiber check, a bounded catalog search for
the nearest table sharing a cell with a target, and certificate replay.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from pydantic import BaseModel, ValidationError

from app.core.config import settings
from app.core.errors import ArgumentError, BudgetExceeded, MarkovError, ParseError
from app.models.certificate import ReductionCertificate, ReductionStep
from app.models.graph import Graph
from app.models.table import Move, Table, parse_cell
from app.services.marginals import is_move, marginals_of

logger = logging.getLogger(__name__)

MAX_CERTIFICATE_DEGREE = 4


class CatalogExhausted(MarkovError):
    """The catalog moves cannot bring two tables to a shared cell."""


# ==========================================================
# Building certificates
# ==========================================================

def check_same_fiber(g: Graph, t1: Table, t2: Table) -> None:
    if marginals_of(g, t1) != marginals_of(g, t2):
        raise ArgumentError(f"{t1} and {t2} lie in different fibers of {g}")


def search_shared_cell(
    start: Table,
    target: Table,
    catalog: list[Move],
    cap: int | None = None,
) -> tuple[Table, list[ReductionStep]]:
    """
    Breadth-first search from `start` for `target` or the nearest table that
    shares a cell with it. At the first depth holding such a table, `target`
    itself wins, then the least table.

    Raises:
        CatalogExhausted: If no catalog path reaches such a table.
        BudgetExceeded: If the search visits more than `cap` tables.
    """
    cap = settings.FIBER_BUDGET if cap is None else cap
    goal = target.support
    parents: dict[Table, tuple[Table, ReductionStep] | None] = {start: None}
    level = [start]
    while level:
        if target in parents:
            hit = target
        else:
            hits = [t for t in level if t.support & goal]
            hit = min(hits) if hits else None
        if hit is not None:
            steps: list[ReductionStep] = []
            node = hit
            while parents[node] is not None:
                node, step = parents[node]
                steps.append(step)
            return hit, steps[::-1]
        nxt: list[Table] = []
        for t in level:
            for m in catalog:
                for sign in (1, -1):
                    u = m.apply(t, sign)
                    if u is None or u in parents:
                        continue
                    parents[u] = (t, ReductionStep(m, sign))
                    nxt.append(u)
                    if len(parents) > cap:
                        raise BudgetExceeded("reduction search exceeded the fiber budget", len(parents))
        level = sorted(nxt)
    raise CatalogExhausted(f"no catalog path from {start} towards {target}")


# ==========================================================
# Replay
# ==========================================================

@dataclass(frozen=True)
class CertificateVerdict:
    """
    Attributes:
        valid (bool): True when the certificate replays exactly.
        length (int): Number of steps.
        reason (str | None): First failure, if any.
    """
    valid: bool
    length: int
    reason: str | None = None


def replay_certificate(g: Graph, cert: ReductionCertificate, max_degree: int = MAX_CERTIFICATE_DEGREE) -> CertificateVerdict:
    """
    Replay a certificate: every step must be a move of g of degree at most
    `max_degree` that keeps the table nonnegative, and the last table must be
    `cert.end`.
    """
    def fail(reason: str) -> CertificateVerdict:
        logger.warning(f"certificate rejected: {reason}")
        return CertificateVerdict(False, cert.length, reason)

    if marginals_of(g, cert.start) != marginals_of(g, cert.end):
        return fail("start and end lie in different fibers")
    t = cert.start
    for i, step in enumerate(cert.steps, start=1):
        if step.move.degree > max_degree:
            return fail(f"step {i} has degree {step.move.degree} > {max_degree}")
        if not is_move(g, step.move):
            return fail(f"step {i} is not a move of the graph")
        nxt = step.move.apply(t, step.sign)
        if nxt is None:
            return fail(f"step {i} leaves the nonnegative orthant")
        t = nxt
    if t != cert.end:
        return fail("replay does not reach the end table")
    return CertificateVerdict(True, cert.length)


# ==========================================================
# JSON
# ==========================================================

class StepOut(BaseModel):
    plus: list[str]
    minus: list[str]
    sign: int


class CertificateOut(BaseModel):
    """JSON form of a certificate: tables as lists of index strings."""
    n: int
    start: list[str]
    end: list[str]
    steps: list[StepOut] = []


def certificate_to_model(cert: ReductionCertificate) -> CertificateOut:
    return CertificateOut(
        n=cert.start.n,
        start=cert.start.rows(),
        end=cert.end.rows(),
        steps=[StepOut(plus=s.move.plus.rows(), minus=s.move.minus.rows(), sign=s.sign) for s in cert.steps],
    )


def certificate_to_json(cert: ReductionCertificate) -> str:
    return certificate_to_model(cert).model_dump_json()


def certificate_from_json(text: str) -> ReductionCertificate:
    """
    Raises:
        ParseError: On malformed JSON or index strings.
    """
    try:
        data = CertificateOut.model_validate_json(text)

        def table(rows: list[str]) -> Table:
            if any(len(r) != data.n for r in rows):
                raise ArgumentError(f"index strings must have length {data.n}")
            return Table(data.n, tuple(parse_cell(r) for r in rows))

        steps = tuple(
            ReductionStep(Move(table(s.plus), table(s.minus)), 1 if s.sign > 0 else -1)
            for s in data.steps
        )
        return ReductionCertificate(table(data.start), table(data.end), steps)
    except (ValidationError, ArgumentError) as exc:
        raise ParseError(f"invalid certificate JSON: {exc}", line=1)


def load_certificate(path: str | Path) -> ReductionCertificate:
    return certificate_from_json(Path(path).read_text(encoding="utf-8"))
