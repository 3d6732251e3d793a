"""
Random walk on a fiber driven by a move set.

Each step draws a move and a sign uniformly at random and applies it; a step
that would create a negative entry is rejected and the walk stays in place.
The walk is reproducible for a fixed seed.
"""
from __future__ import annotations

import logging
from collections import Counter
from typing import Iterable

import numpy as np

from app.core.errors import ArgumentError
from app.models.basis import WalkResult
from app.models.graph import Graph
from app.models.table import Move, Table
from app.services.marginals import is_move

logger = logging.getLogger(__name__)


def random_walk(g: Graph, moves: Iterable[Move], start: Table, steps: int, seed: int) -> WalkResult:
    """
    Run `steps` proposals from `start`.

    Args:
        g (Graph): Model graph.
        moves (Iterable[Move]): Moves of `g`.
        start (Table): Starting table.
        steps (int): Number of proposals.
        seed (int): Seed for `numpy.random.default_rng`.

    Returns:
        WalkResult: Final table, visit counts and rejection count.

    Raises:
        ArgumentError: If a move is invalid, the start table does not fit `g`,
            or `steps` is negative.
    """
    moves = list(moves)
    if start.n != g.n:
        raise ArgumentError(f"start table has {start.n} coordinates, graph has {g.n} vertices")
    if steps < 0:
        raise ArgumentError("steps must be nonnegative")
    for m in moves:
        if not is_move(g, m):
            raise ArgumentError(f"{m} is not a move of {g}")

    rng = np.random.default_rng(seed)
    visits: Counter = Counter({start: 1})
    current = start
    rejected = 0
    for _ in range(steps):
        if moves:
            pick = int(rng.integers(2 * len(moves)))
            m, sign = moves[pick // 2], (1 if pick % 2 == 0 else -1)
            nxt = m.apply(current, sign)
            if nxt is None:
                rejected += 1
            else:
                current = nxt
        visits[current] += 1
    logger.info(f"walk on {g}: {steps} steps, {rejected} rejected, {len(visits)} tables visited")
    return WalkResult(start=start, final=current, visits=visits, steps=steps, rejected=rejected)
