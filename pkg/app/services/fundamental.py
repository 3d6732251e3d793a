"""
The fundamental graph X_d and its distinguished generator f_d.

Vertices of X_d are pairs (S, T) of equal-size subsets of {1..d} with
1 <= |S| <= d/2, and 1 in S when |S| = d/2. Two distinct pairs are adjacent
when |S1 & S2| == |T1 & T2|.

f_d is the degree-d binomial on X_d whose plus tableau has a 1 in row j at
vertex (S, T) iff j is in S, and whose minus tableau uses T instead.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from app.core.config import settings
from app.core.errors import ArgumentError, CapabilityError
from app.models.classifier import FundamentalVertex
from app.models.graph import Graph
from app.models.table import Move, Table

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FundamentalGraph:
    """
    X_d with vertex i of `graph` labeled by `labels[i]`.

    Attributes:
        d (int): Degree.
        graph (Graph): Graph on 0..N-1.
        labels (tuple[FundamentalVertex, ...]): (S, T) of each vertex.
    """
    d: int
    graph: Graph
    labels: tuple[FundamentalVertex, ...]

    def index(self, fv: FundamentalVertex) -> int:
        return self.labels.index(fv)


def _check_degree(d: int) -> None:
    if d < 2:
        raise ArgumentError(f"fundamental graph needs d >= 2, got {d}")
    if d > settings.MAX_FUNDAMENTAL_DEGREE:
        raise CapabilityError(f"X_{d} exceeds the limit d <= {settings.MAX_FUNDAMENTAL_DEGREE}")


def fundamental_vertices(d: int) -> list[FundamentalVertex]:
    """Valid (S, T) pairs ordered by |S|, then S, then T."""
    labels = range(1, d + 1)
    out = []
    for k in range(1, d // 2 + 1):
        for s in combinations(labels, k):
            if 2 * k == d and 1 not in s:
                continue
            for t in combinations(labels, k):
                out.append(FundamentalVertex(s, t))
    return out


@lru_cache(maxsize=None)
def fundamental_graph(d: int) -> FundamentalGraph:
    """
    Build X_d.

    Raises:
        ArgumentError: If d < 2.
        CapabilityError: If d > MAX_FUNDAMENTAL_DEGREE.
    """
    _check_degree(d)
    verts = fundamental_vertices(d)
    edges = []
    for (i, a), (j, b) in combinations(enumerate(verts), 2):
        if len(set(a.s) & set(b.s)) == len(set(a.t) & set(b.t)):
            edges.append((i, j))
    fg = FundamentalGraph(d, Graph.from_edges(len(verts), edges), tuple(verts))
    logger.info(f"X_{d}: {len(verts)} vertices, {len(edges)} edges")
    return fg


def pattern_rows(d: int, labels: list[FundamentalVertex]) -> tuple[list[int], list[int]]:
    """
    Plus and minus rows of the tableau whose column i is labels[i]: row j has a
    1 in column i iff j is in S (plus) or in T (minus).
    """
    width = len(labels)
    plus, minus = [], []
    for j in range(1, d + 1):
        p = m = 0
        for i, fv in enumerate(labels):
            bit = 1 << (width - 1 - i)
            if j in fv.s:
                p |= bit
            if j in fv.t:
                m |= bit
        plus.append(p)
        minus.append(m)
    return plus, minus


def distinguished_generator(d: int) -> Move:
    """f_d as a move on `fundamental_graph(d).graph`."""
    fg = fundamental_graph(d)
    plus, minus = pattern_rows(d, list(fg.labels))
    n = fg.graph.n
    return Move(Table(n, tuple(plus)), Table(n, tuple(minus)))
