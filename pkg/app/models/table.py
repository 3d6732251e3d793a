"""
This module defines the contingency-table value types of the binary graph model:

- `Table`: a nonnegative integer table on the 2^n cells, equivalently a monomial
  in the cell variables p_{i_1...i_n}.
- `Move`: an ordered pair of tables (plus, minus), equivalently the binomial
  p^{plus} - p^{minus}.
- `MarginalVector`: the image of a table under the marginal map of a graph.

Cells are encoded as integers whose binary expansion is the index string, most
significant bit first, so vertex position k of an n-vertex graph reads
`(cell >> (n - 1 - k)) & 1` and cells sort as binary numbers with 0...0 first.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from app.core.errors import ArgumentError
from app.models.graph import Edge


def cell_bits(cell: int, n: int) -> str:
    """Index string of `cell` for an n-vertex model, e.g. cell_bits(5, 4) == '0101'."""
    return format(cell, f"0{n}b") if n else ""


def parse_cell(bits: str) -> int:
    """Inverse of `cell_bits`."""
    if bits and set(bits) - {"0", "1"}:
        raise ArgumentError(f"index string {bits!r} is not binary")
    return int(bits, 2) if bits else 0


def bit_at(cell: int, n: int, k: int) -> int:
    """Bit of `cell` at vertex position k."""
    return (cell >> (n - 1 - k)) & 1


@dataclass(frozen=True, order=True)
class Table:
    """
    Nonnegative integer table, stored as the sorted multiset of its cells.

    A cell with count c appears c times in `cells`; the degree of the table
    (the degree of the monomial) is therefore `len(cells)`.

    Attributes:
        n (int): Number of binary coordinates (vertices of the ambient graph).
        cells (tuple[int, ...]): Sorted cells with repetition.
    """
    n: int
    cells: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ArgumentError("table dimension must be nonnegative")
        if any(c < 0 or c >= (1 << self.n) for c in self.cells):
            raise ArgumentError(f"cell out of range for a {self.n}-way binary table")
        if list(self.cells) != sorted(self.cells):
            object.__setattr__(self, "cells", tuple(sorted(self.cells)))

    @classmethod
    def from_counts(cls, n: int, counts: Mapping[int, int]) -> Table:
        cells: list[int] = []
        for cell, count in counts.items():
            if count < 0:
                raise ArgumentError(f"negative entry {count} at cell {cell_bits(cell, n)}")
            cells.extend([cell] * count)
        return cls(n, tuple(sorted(cells)))

    @classmethod
    def from_bits(cls, rows: Iterable[str]) -> Table:
        """Build a table from index strings, one per unit of count."""
        rows = list(rows)
        if not rows:
            raise ArgumentError("cannot infer table dimension from no rows; use Table(n)")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ArgumentError("index strings have different lengths")
        return cls(n, tuple(sorted(parse_cell(r) for r in rows)))

    @classmethod
    def zero(cls, n: int) -> Table:
        return cls(n, ())

    @property
    def degree(self) -> int:
        return len(self.cells)

    @cached_property
    def entries(self) -> dict[int, int]:
        """Map cell -> count, absent cells mean 0."""
        return dict(Counter(self.cells))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.cells)

    def count(self, cell: int) -> int:
        return self.entries.get(cell, 0)

    def rows(self) -> list[str]:
        """Index strings of the table, one per unit of count (tableau rows)."""
        return [cell_bits(c, self.n) for c in self.cells]

    def to_vector(self) -> np.ndarray:
        v = np.zeros(1 << self.n, dtype=np.int64)
        for cell, count in self.entries.items():
            v[cell] = count
        return v

    def _check_same_n(self, other: Table) -> None:
        if other.n != self.n:
            raise ArgumentError(f"size mismatch: {self.n}-way table vs {other.n}-way table")

    def __add__(self, other: Table) -> Table:
        self._check_same_n(other)
        return Table(self.n, tuple(sorted(self.cells + other.cells)))

    def contains(self, other: Table) -> bool:
        """True iff other <= self entrywise (the monomial `other` divides `self`)."""
        self._check_same_n(other)
        mine = self.entries
        return all(mine.get(c, 0) >= k for c, k in other.entries.items())

    def minus(self, other: Table) -> Table | None:
        """Entrywise difference, or None when it would go negative."""
        self._check_same_n(other)
        remaining = Counter(self.entries)
        for c, k in other.entries.items():
            if remaining[c] < k:
                return None
            remaining[c] -= k
        return Table.from_counts(self.n, +remaining)

    def gcd(self, other: Table) -> Table:
        """Entrywise minimum (greatest common divisor of the two monomials)."""
        self._check_same_n(other)
        common = Counter(self.entries) & Counter(other.entries)
        return Table.from_counts(self.n, common)

    def map_cells(self, fn) -> Table:
        return Table(self.n, tuple(sorted(fn(c) for c in self.cells)))

    def __repr__(self) -> str:
        return f"Table({'.'.join(self.rows()) or '1'})"


@dataclass(frozen=True, order=True)
class Move:
    """
    Binomial p^{plus} - p^{minus}.

    Validity as a move of a particular graph (disjoint supports, equal degree,
    equal marginals, nonzero) is checked by `app.services.marginals.is_move`,
    so malformed candidates can still be represented and rejected.

    Attributes:
        plus (Table): Positive part.
        minus (Table): Negative part.
    """
    plus: Table
    minus: Table

    def __post_init__(self):
        if self.plus.n != self.minus.n:
            raise ArgumentError("plus and minus tables have different dimensions")

    @property
    def n(self) -> int:
        return self.plus.n

    @property
    def degree(self) -> int:
        return max(self.plus.degree, self.minus.degree)

    def negated(self) -> Move:
        return Move(self.minus, self.plus)

    def sign_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Serialization that identifies a move with its negation."""
        a, b = self.plus.cells, self.minus.cells
        return (a, b) if a <= b else (b, a)

    def up_to_sign(self) -> Move:
        """The representative of {m, -m} whose plus side is smaller."""
        return self if self.plus <= self.minus else self.negated()

    def apply(self, t: Table, sign: int = 1) -> Table | None:
        """
        Apply the move to a table.

        sign=+1 trades a copy of `minus` for a copy of `plus`; sign=-1 does the
        reverse. Returns None when the result would have a negative entry.
        """
        take, give = (self.minus, self.plus) if sign > 0 else (self.plus, self.minus)
        rest = t.minus(take)
        return None if rest is None else rest + give

    def map_cells(self, fn) -> Move:
        return Move(self.plus.map_cells(fn), self.minus.map_cells(fn))


@dataclass(frozen=True)
class MarginalVector:
    """
    Edge and isolated-vertex marginals of a table.

    `counts` follows the row order of the marginal matrix: one block of four
    counts (cells 00, 01, 10, 11, smaller endpoint first) per edge in sorted edge
    order, then one block of two counts per isolated vertex.

    Attributes:
        edges (tuple[Edge, ...]): Sorted edges of the graph.
        isolated (tuple[int, ...]): Isolated vertices of the graph.
        counts (tuple[int, ...]): Flattened marginal counts.
    """
    edges: tuple[Edge, ...]
    isolated: tuple[int, ...]
    counts: tuple[int, ...]

    def __post_init__(self):
        expected = 4 * len(self.edges) + 2 * len(self.isolated)
        if len(self.counts) != expected:
            raise ArgumentError(f"marginal vector has {len(self.counts)} entries, expected {expected}")

    @property
    def edge_counts(self) -> dict[Edge, tuple[tuple[int, int], tuple[int, int]]]:
        out = {}
        for i, e in enumerate(self.edges):
            c = self.counts[4 * i: 4 * i + 4]
            out[e] = ((c[0], c[1]), (c[2], c[3]))
        return out

    @property
    def vertex_counts(self) -> dict[int, tuple[int, int]]:
        base = 4 * len(self.edges)
        return {
            v: (self.counts[base + 2 * i], self.counts[base + 2 * i + 1])
            for i, v in enumerate(self.isolated)
        }

    @property
    def total(self) -> int:
        """Table degree recovered from the first block (every block sums to it)."""
        if not self.counts:
            return 0
        width = 4 if self.edges else 2
        return sum(self.counts[:width])

    def __add__(self, other: MarginalVector) -> MarginalVector:
        if (self.edges, self.isolated) != (other.edges, other.isolated):
            raise ArgumentError("marginal vectors belong to different graphs")
        return MarginalVector(
            self.edges, self.isolated, tuple(a + b for a, b in zip(self.counts, other.counts))
        )

    def key(self) -> bytes:
        """Canonical byte serialization used for fiber grouping."""
        return np.asarray(self.counts, dtype=np.int64).tobytes()
