"""
Action of bit flips and graph automorphisms on cells, tables and moves.

A group element is a pair (flip, sigma): the cell is first XOR-ed with the
flip mask, then its coordinates are permuted by the automorphism sigma (the
bit of vertex v moves to the position of sigma(v)). Moves are compared up to
sign, so the canonical form of a move is the least `sign_key` over its orbit.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from app.core.errors import ArgumentError
from app.models.graph import Graph
from app.models.table import Move, Table, bit_at
from app.services.graph_ops import automorphisms
from app.services.marginals import is_move

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupElement:
    """
    (flip, sigma) acting on cells through a lookup table.

    Attributes:
        flip (int): XOR mask on cells.
        cell_map (tuple[int, ...]): Coordinate permutation of sigma, tabulated per cell.
    """
    flip: int
    cell_map: tuple[int, ...]

    def cell(self, c: int) -> int:
        return self.cell_map[c ^ self.flip]

    def table(self, t: Table) -> Table:
        return Table(t.n, tuple(sorted(self.cell(c) for c in t.cells)))

    def move(self, m: Move) -> Move:
        return Move(self.table(m.plus), self.table(m.minus))


def _cell_map(g: Graph, sigma: dict[int, int]) -> tuple[int, ...]:
    n, pos = g.n, g.position
    out = []
    for c in range(1 << n):
        image = 0
        for v in g.vertices:
            if bit_at(c, n, pos[v]):
                image |= 1 << (n - 1 - pos[sigma[v]])
        out.append(image)
    return tuple(out)


@lru_cache(maxsize=256)
def automorphism_cell_maps(g: Graph, with_automorphisms: bool = True) -> tuple[tuple[int, ...], ...]:
    """Tabulated coordinate permutations, identity first."""
    identity = tuple(range(1 << g.n))
    if not with_automorphisms:
        return (identity,)
    maps = {_cell_map(g, sigma) for sigma in automorphisms(g)}
    maps.discard(identity)
    return (identity, *sorted(maps))


def group_elements(g: Graph, with_automorphisms: bool = True) -> list[GroupElement]:
    """All elements of (Z/2)^n, semidirect Aut(G) when requested."""
    return [
        GroupElement(flip, cm)
        for cm in automorphism_cell_maps(g, with_automorphisms)
        for flip in range(1 << g.n)
    ]


def _orbit_keys(g: Graph, m: Move, with_automorphisms: bool):
    n = g.n
    for cm in automorphism_cell_maps(g, with_automorphisms):
        for flip in range(1 << n):
            plus = tuple(sorted(cm[c ^ flip] for c in m.plus.cells))
            minus = tuple(sorted(cm[c ^ flip] for c in m.minus.cells))
            yield (plus, minus) if plus <= minus else (minus, plus)


def canonicalize_move(g: Graph, m: Move) -> Move:
    """
    Least representative of the orbit of `m` up to sign.

    Raises:
        ArgumentError: If `m` is not a move of `g`.
    """
    if not is_move(g, m):
        raise ArgumentError(f"{m} is not a move of {g}")
    plus, minus = min(_orbit_keys(g, m, True))
    return Move(Table(g.n, plus), Table(g.n, minus))


def expand_orbit(g: Graph, m: Move, with_automorphisms: bool = True) -> list[Move]:
    """Distinct moves (up to sign) in the orbit of `m`, sorted."""
    keys = sorted(set(_orbit_keys(g, m, with_automorphisms)))
    return [Move(Table(g.n, a), Table(g.n, b)) for a, b in keys]


def expand_orbits(g: Graph, moves, with_automorphisms: bool = True) -> list[Move]:
    """Union of the orbits of several moves, deduplicated up to sign."""
    keys: set = set()
    for m in moves:
        keys.update(_orbit_keys(g, m, with_automorphisms))
    return [Move(Table(g.n, a), Table(g.n, b)) for a, b in sorted(keys)]
