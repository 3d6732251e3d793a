"""
This module implements the marginal map of a binary graph model.

Row order of A_G: one block per edge in sorted edge order, each with the four
cells 00, 01, 10, 11 (smaller endpoint first), then one block per isolated
vertex with cells 0, 1. Columns are cells in binary-number order.

Besides the explicit matrix it offers a packed-integer encoding of marginals:
each row becomes a bit field of fixed width, so the marginals of a table are
the plain integer sum of the packed codes of its cells. Fiber grouping and
enumeration rely on this encoding.

Used By:
    - Fiber enumeration and the basis engine.
    - The polytope dimension and facet checks.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from app.core.config import settings
from app.core.errors import ArgumentError, CapabilityError
from app.models.graph import Graph
from app.models.table import MarginalVector, Move, Table, bit_at
from app.services.graph_ops import is_forest

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MarginalLayout:
    """
    Row structure of A_G.

    Attributes:
        graph (Graph): The model graph.
        labels (tuple[str, ...]): Human-readable row labels, e.g. `e(0,1)=01`.
        cell_rows (tuple[tuple[int, ...], ...]): For each cell, the rows it hits
            (exactly one per block).
    """
    graph: Graph
    labels: tuple[str, ...]
    cell_rows: tuple[tuple[int, ...], ...]

    @property
    def n_rows(self) -> int:
        return len(self.labels)

    @property
    def n_cells(self) -> int:
        return len(self.cell_rows)

    def packed_codes(self, width: int) -> list[int]:
        """Per-cell packed marginal codes with `width` bits per row."""
        return [sum(1 << (r * width) for r in rows) for rows in self.cell_rows]

    def unpack(self, key: int, width: int) -> tuple[int, ...]:
        mask = (1 << width) - 1
        return tuple((key >> (r * width)) & mask for r in range(self.n_rows))

    def vector(self, counts: tuple[int, ...]) -> MarginalVector:
        return MarginalVector(self.graph.sorted_edges, self.graph.isolated, counts)


def rows_of_cell(g: Graph, cell: int) -> tuple[int, ...]:
    """Rows of A_G hit by one cell, one per block."""
    n = g.n
    pos = g.position
    rows = [
        4 * i + 2 * bit_at(cell, n, pos[u]) + bit_at(cell, n, pos[v])
        for i, (u, v) in enumerate(g.sorted_edges)
    ]
    base = 4 * len(g.edges)
    rows += [base + 2 * i + bit_at(cell, n, pos[v]) for i, v in enumerate(g.isolated)]
    return tuple(rows)


def row_labels(g: Graph) -> tuple[str, ...]:
    labels: list[str] = []
    for u, v in g.sorted_edges:
        labels += [f"e({u},{v})={a}{b}" for a in (0, 1) for b in (0, 1)]
    for v in g.isolated:
        labels += [f"v({v})={a}" for a in (0, 1)]
    return tuple(labels)


@lru_cache(maxsize=512)
def layout(g: Graph) -> MarginalLayout:
    """Full row layout; materializes all 2^n cells, so only for small graphs."""
    if g.n > settings.MAX_MATRIX_VERTICES:
        raise CapabilityError(
            f"cell layout has 2^{g.n} cells; the limit is {settings.MAX_MATRIX_VERTICES} vertices"
        )
    cell_rows = tuple(rows_of_cell(g, cell) for cell in range(1 << g.n))
    return MarginalLayout(g, row_labels(g), cell_rows)


def field_width(degree: int) -> int:
    """Bits per packed row so that counts up to `degree` never carry."""
    return max(1, degree.bit_length())


def packed_key(g: Graph, t: Table, width: int) -> int:
    codes = layout(g).packed_codes(width)
    return sum(codes[c] for c in t.cells)


# ==========================================================
# Public operations
# ==========================================================

def marginal_matrix(g: Graph) -> np.ndarray:
    """
    The 0/1 matrix A_G, rows as documented above and one column per cell.

    Raises:
        CapabilityError: If `g` has more than MAX_MATRIX_VERTICES vertices.
    """
    if g.n > settings.MAX_MATRIX_VERTICES:
        raise CapabilityError(
            f"A_G has 2^{g.n} columns; the limit is {settings.MAX_MATRIX_VERTICES} vertices"
        )
    lay = layout(g)
    a = np.zeros((lay.n_rows, lay.n_cells), dtype=np.int64)
    for cell, rows in enumerate(lay.cell_rows):
        a[list(rows), cell] = 1
    return a


def marginals_of(g: Graph, t: Table) -> MarginalVector:
    """
    Image of `t` under the marginal map of `g`.

    Raises:
        ArgumentError: If the table dimension differs from the vertex count.
    """
    if t.n != g.n:
        raise ArgumentError(f"table has {t.n} coordinates but the graph has {g.n} vertices")
    counts = [0] * (4 * len(g.edges) + 2 * len(g.isolated))
    for cell, k in t.entries.items():
        for r in rows_of_cell(g, cell):
            counts[r] += k
    return MarginalVector(g.sorted_edges, g.isolated, tuple(counts))


def is_move(g: Graph, m: Move) -> bool:
    """True iff both sides are nonzero, have disjoint support and equal marginals."""
    if m.n != g.n:
        return False
    if m.plus.degree == 0 or m.minus.degree == 0:
        return False
    if m.plus.support & m.minus.support:
        return False
    return marginals_of(g, m.plus) == marginals_of(g, m.minus)


def polytope_dimension(g: Graph) -> int:
    """Dimension of the marginal polytope, rank(A_G) - 1."""
    return int(np.linalg.matrix_rank(marginal_matrix(g))) - 1


def claimed_facet_is_facet(g: Graph, row: int) -> bool:
    """
    Check that the coordinate inequality y_row >= 0 defines a facet.

    The columns of A_G with a 0 in `row` must span an affine space of dimension
    dim(P_G) - 1. All columns lie on the hyperplane "block sum = 1", so affine
    dimension equals rank - 1.

    Raises:
        CapabilityError: If `g` is not a forest.
        ArgumentError: If `row` is out of range.
    """
    if not is_forest(g):
        raise CapabilityError("facet check is only claimed for forests")
    a = marginal_matrix(g)
    if not 0 <= row < a.shape[0]:
        raise ArgumentError(f"row {row} out of range 0..{a.shape[0] - 1}")
    dim = int(np.linalg.matrix_rank(a)) - 1
    face = a[:, a[row] == 0]
    if face.shape[1] == 0:
        return False
    face_dim = int(np.linalg.matrix_rank(face)) - 1
    logger.debug(f"row {row} of {g}: face dimension {face_dim}, polytope dimension {dim}")
    return face_dim == dim - 1
