"""
Result types produced by the basis engine, the fiber verifier and the sampler.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Literal

from app.models.graph import Graph
from app.models.table import MarginalVector, Move, Table

Step = tuple[Move, int]


@dataclass(frozen=True)
class FiberGraph:
    """
    One fiber together with the moves that connect its tables.

    Attributes:
        nodes (tuple[Table, ...]): Tables of the fiber, sorted.
        edges (tuple[tuple[int, int], ...]): Index pairs (i, j), i < j, of tables
            that differ by one application of an allowed move.
        components (tuple[tuple[int, ...], ...]): Connected components as sorted
            index tuples, ordered by their least member.
    """
    nodes: tuple[Table, ...]
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def component_index(self) -> dict[Table, int]:
        return {self.nodes[i]: k for k, comp in enumerate(self.components) for i in comp}


@dataclass(frozen=True)
class DegreeResult:
    """
    Minimal generators found at one degree.

    Attributes:
        degree (int): Degree of the generators.
        count (int): Number of minimal generators of this degree.
        representatives (tuple[Move, ...]): One move per counted generator.
        fibers (int): Fibers with at least two tables.
        status (str): `complete`, or `skipped` when a budget stopped the sweep.
        reason (str | None): Why the degree was skipped.
    """
    degree: int
    count: int = 0
    representatives: tuple[Move, ...] = ()
    fibers: int = 0
    status: Literal["complete", "skipped"] = "complete"
    reason: str | None = None


@dataclass(frozen=True)
class WidthStatus:
    """Markov width: `exact` when certified, otherwise `value` is a lower bound."""
    value: int
    exact: bool


@dataclass
class BasisReport:
    graph: Graph
    per_degree: dict[int, DegreeResult] = field(default_factory=dict)
    width: WidthStatus = WidthStatus(0, False)
    partial: bool = False

    @property
    def counts(self) -> dict[int, int]:
        return {d: r.count for d, r in sorted(self.per_degree.items()) if r.status == "complete"}

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def moves(self) -> list[Move]:
        return [m for d in sorted(self.per_degree) for m in self.per_degree[d].representatives]


@dataclass(frozen=True)
class FiberVerdict:
    """
    Connectivity verdict for one fiber under a move set.

    Attributes:
        fiber (MarginalVector): The fiber's marginals.
        status (str): `connected`, `disconnected` or `skipped`.
        size (int): Number of tables enumerated (partial count when skipped).
        pair (tuple[Table, Table] | None): Two tables in different components.
        paths (dict[Table, tuple[Step, ...]]): For each table, a sequence of
            (move, sign) applications reaching it from the least table.
        reason (str | None): Why the fiber was skipped.
    """
    fiber: MarginalVector
    status: Literal["connected", "disconnected", "skipped"]
    size: int
    pair: tuple[Table, Table] | None = None
    paths: dict[Table, tuple[Step, ...]] = field(default_factory=dict)
    reason: str | None = None


@dataclass(frozen=True)
class WalkResult:
    """
    Outcome of a fiber random walk.

    Attributes:
        start (Table): Starting table.
        final (Table): Table after the last step.
        visits (Counter[Table]): Visit counts, the start included once.
        steps (int): Proposals made.
        rejected (int): Proposals that would have produced a negative entry.
    """
    start: Table
    final: Table
    visits: Counter
    steps: int
    rejected: int

    @property
    def accepted(self) -> int:
        return self.steps - self.rejected


@dataclass(frozen=True)
class DegreeCheck:
    """
    Connectivity of all fibers of one degree under a move set.

    Attributes:
        degree (int): Degree checked.
        fibers (int): Fibers with at least two tables.
        disconnected (int): Fibers left with more than one component.
        pair (tuple[Table, Table] | None): Two unconnected tables of the first
            disconnected fiber.
        status (str): `complete`, or `skipped` when the budget stopped the sweep.
        reason (str | None): Why the degree was skipped.
    """
    degree: int
    fibers: int = 0
    disconnected: int = 0
    pair: tuple[Table, Table] | None = None
    status: Literal["complete", "skipped"] = "complete"
    reason: str | None = None

    @property
    def connected(self) -> bool:
        return self.status == "complete" and self.disconnected == 0
