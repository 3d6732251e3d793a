"""
Records used by the structural classifier: vertices of the fundamental graph,
components of the 3-coloring graph, and generator candidates with the
provenance that explains where each one came from.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from app.core.errors import ArgumentError
from app.models.graph import Graph, MinorTrace
from app.models.table import Move


@dataclass(frozen=True, order=True)
class FundamentalVertex:
    """
    Vertex (S, T) of the fundamental graph X_d, with S, T subsets of {1..d}.

    Attributes:
        s (tuple[int, ...]): Sorted elements of S.
        t (tuple[int, ...]): Sorted elements of T.
    """
    s: tuple[int, ...]
    t: tuple[int, ...]

    def validate(self, d: int) -> None:
        k = len(self.s)
        if k != len(self.t):
            raise ArgumentError(f"|S| != |T| for {self}")
        if not 1 <= k <= d // 2:
            raise ArgumentError(f"|S| = {k} outside 1..{d // 2}")
        if 2 * k == d and 1 not in self.s:
            raise ArgumentError(f"{self} has |S| = d/2 but 1 not in S")
        if not set(self.s) | set(self.t) <= set(range(1, d + 1)):
            raise ArgumentError(f"{self} uses labels outside 1..{d}")

    def label(self) -> str:
        return f"({''.join(map(str, self.s))},{''.join(map(str, self.t))})"


@dataclass(frozen=True)
class ColoringGraphComponent:
    """
    Connected component of the 3-coloring graph.

    Attributes:
        representative (tuple[int, ...]): Lexicographically least coloring in the
            component, one color in {0, 1, 2} per vertex position.
        size (int): Number of proper colorings in the component.
    """
    representative: tuple[int, ...]
    size: int


@dataclass(frozen=True)
class PullbackProvenance:
    kind: Literal["pullback"]
    trace: MinorTrace
    homomorphism: tuple[int, ...]


@dataclass(frozen=True)
class PartitionProvenance:
    kind: Literal["partition"]
    v1: frozenset[int]
    v2: frozenset[int]
    v3: frozenset[int]


@dataclass(frozen=True)
class ColoringProvenance:
    kind: Literal["coloring"]
    trace: MinorTrace
    base: tuple[int, ...]
    other: tuple[int, ...]


Provenance = PullbackProvenance | PartitionProvenance | ColoringProvenance


@dataclass(frozen=True)
class GeneratorCandidate:
    """
    A move proposed by one of the structural constructions.

    Attributes:
        graph (Graph): Graph the move lives on.
        move (Move): The proposed binomial.
        provenance (Provenance): Construction that produced it.
        minimal (bool | None): Minimality certificate, None when unchecked.
    """
    graph: Graph
    move: Move
    provenance: Provenance
    minimal: bool | None = None
