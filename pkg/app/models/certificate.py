"""
Connectivity certificates produced by the cycle and K_{2,n} reduction procedures.
"""
from __future__ import annotations

from dataclasses import dataclass

from app.models.table import Move, Table


@dataclass(frozen=True)
class ReductionStep:
    """
    One move application. sign=+1 trades `move.minus` for `move.plus`.
    """
    move: Move
    sign: int


@dataclass(frozen=True)
class ReductionCertificate:
    """
    Path of move applications leading from `start` to `end` inside one fiber.

    Attributes:
        start (Table): First table.
        end (Table): Table the replayed path must reach.
        steps (tuple[ReductionStep, ...]): Applications in order.
    """
    start: Table
    end: Table
    steps: tuple[ReductionStep, ...] = ()

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def max_degree(self) -> int:
        return max((s.move.degree for s in self.steps), default=0)
