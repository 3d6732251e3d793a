"""
Markov basis verification.

Two checks are offered:

- `verify_markov_basis` enumerates each requested fiber and searches it
  breadth-first with the signed moves, keeping a witness path for every
  reached table.
- `verify_up_to_degree` checks every fiber of degrees 2..dmax at once. Going
  up in degree, once all lower fibers are connected, two tables of a degree-d
  fiber sharing a cell are connected as well, so only the shared-cell relation
  and the degree-d moves themselves need to be tracked.
"""
from __future__ import annotations

import logging
from collections import deque
from typing import Iterable

from networkx.utils import UnionFind

from app.core.errors import ArgumentError, BudgetExceeded, CapabilityError
from app.models.basis import DegreeCheck, FiberVerdict, Step
from app.models.graph import Graph
from app.models.table import MarginalVector, Move, Table
from app.services.basis_engine import shared_variable_components
from app.services.fibers import degree_d_fibers, enumerate_fiber
from app.services.marginals import is_move

logger = logging.getLogger(__name__)


def _check_moves(g: Graph, moves: Iterable[Move]) -> list[Move]:
    moves = list(moves)
    for m in moves:
        if not is_move(g, m):
            raise ArgumentError(f"{m} is not a move of {g}")
    return moves


def connect_fiber(tables: list[Table], moves: list[Move]) -> dict[Table, tuple[Step, ...]]:
    """Breadth-first search from the least table; returns a path to every reached table."""
    members = set(tables)
    root = min(tables)
    paths: dict[Table, tuple[Step, ...]] = {root: ()}
    queue = deque([root])
    while queue:
        t = queue.popleft()
        for m in moves:
            for sign in (1, -1):
                nxt = m.apply(t, sign)
                if nxt is not None and nxt in members and nxt not in paths:
                    paths[nxt] = paths[t] + ((m, sign),)
                    queue.append(nxt)
    return paths


def verify_markov_basis(
    g: Graph,
    moves: Iterable[Move],
    fibers: list[MarginalVector],
    cap: int | None = None,
) -> list[FiberVerdict]:
    """
    Decide for each fiber whether `moves` connect it.

    Args:
        g (Graph): Model graph.
        moves (Iterable[Move]): Candidate Markov basis.
        fibers (list[MarginalVector]): Fibers to check.
        cap (int | None): Max tables per fiber enumeration.

    Returns:
        list[FiberVerdict]: `connected` with witness paths, `disconnected` with a
        pair of unreachable tables, or `skipped` when the fiber is too large.

    Raises:
        ArgumentError: If some input move is not a move of `g`.
    """
    moves = _check_moves(g, moves)
    verdicts: list[FiberVerdict] = []
    for mv in fibers:
        try:
            tables = enumerate_fiber(g, mv, cap)
        except BudgetExceeded as exc:
            logger.warning(f"fiber skipped: {exc}")
            verdicts.append(FiberVerdict(mv, "skipped", exc.count, reason=str(exc)))
            continue
        paths = connect_fiber(tables, moves)
        if len(paths) == len(tables):
            verdicts.append(FiberVerdict(mv, "connected", len(tables), paths=paths))
        else:
            unreached = min(t for t in tables if t not in paths)
            verdicts.append(FiberVerdict(mv, "disconnected", len(tables), pair=(min(tables), unreached)))
        logger.debug(f"fiber of size {len(tables)}: {verdicts[-1].status}")
    return verdicts


def replay_path(start: Table, path: tuple[Step, ...]) -> Table:
    """Apply a witness path; raises ArgumentError when a step would go negative."""
    t = start
    for m, sign in path:
        nxt = m.apply(t, sign)
        if nxt is None:
            raise ArgumentError(f"step {m} ({sign:+d}) leaves the nonnegative orthant at {t}")
        t = nxt
    return t


def verify_up_to_degree(
    g: Graph,
    moves: Iterable[Move],
    dmax: int,
    budget: int | None = None,
) -> list[DegreeCheck]:
    """
    Check that `moves` connect every fiber of degree 2..dmax.

    A degree is only meaningful when all lower degrees came out connected;
    checking continues regardless so the report shows every failing degree.
    """
    moves = _check_moves(g, moves)
    checks: list[DegreeCheck] = []
    for d in range(2, dmax + 1):
        try:
            fibers = degree_d_fibers(g, d, budget=budget, keep_singletons=False)
        except CapabilityError as exc:
            logger.warning(f"degree {d} skipped: {exc}")
            checks.append(DegreeCheck(d, status="skipped", reason=str(exc)))
            continue
        top = [m for m in moves if m.plus.degree == d]
        disconnected = 0
        pair = None
        for tables in fibers.values():
            index = {t: i for i, t in enumerate(tables)}
            uf = UnionFind(range(len(tables)))
            for comp in shared_variable_components(tables):
                uf.union(*comp)
            for m in top:
                a, b = index.get(m.plus), index.get(m.minus)
                if a is not None and b is not None:
                    uf.union(a, b)
            root = uf[0]
            strays = [i for i in range(len(tables)) if uf[i] != root]
            if strays:
                disconnected += 1
                pair = pair or (tables[0], tables[strays[0]])
        checks.append(DegreeCheck(d, fibers=len(fibers), disconnected=disconnected, pair=pair))
        logger.info(f"{g}: degree {d}, {len(fibers)} fibers, {disconnected} disconnected")
    return checks
