"""
The cycle C_n: its quartic generators and reduction certificates.

A reduction anchors one cell of each table so that the two agree on vertices
n-1 and 0, choosing the closest such pair. It then clears the lowest block of
positions where the anchors disagree, using local moves that change nothing
outside the block and its two boundary vertices:

- a quadric swapping part of the block between an anchor and another cell of
  its table that agrees with it on both ends of that part;
- a quadric pair routing the swap through a third cell;
- the quartic switching the block between four cells whose boundary values
  cover all four patterns.

Each local move brings the anchors closer. Once they coincide, the shared cell
is divided out and the next pair is taken. A configuration none of the local
moves covers falls back to a catalog search for the nearest table sharing a
cell, still using only moves of degree 2 and 4.
"""
from __future__ import annotations

import logging
from functools import lru_cache

from app.core.config import settings
from app.core.errors import ArgumentError
from app.models.certificate import ReductionCertificate, ReductionStep
from app.models.table import Move, Table, bit_at
from app.services.catalog import cycle
from app.services.certificates import check_same_fiber, search_shared_cell
from app.services.classifier import degree2_moves, triangle_quartics

logger = logging.getLogger(__name__)


@lru_cache(maxsize=16)
def cycle_quartics(n: int) -> tuple[Move, ...]:
    """
    All quartic minimal generators of C_n, distinct up to sign; there are
    C(n, 3) * 2^(n - 3) of them.

    They are derived rather than read off the four-row tableau with columns
    V_1, x_1, V_2, x_2: the K_3 quartic is lifted along each of the C(n, 3)
    contractions of the cycle onto a triangle and expanded over vertex state
    flips. Every lift has that four-row form, with V_2 the arc contracted to
    the middle vertex and the V_1 columns copying the x_1 or x_2 column up to
    a flip.

    Raises:
        ArgumentError: If n < 3.
    """
    if n < 3:
        raise ArgumentError(f"a cycle needs n >= 3, got {n}")
    moves = tuple(triangle_quartics(cycle(n)))
    logger.info(f"C_{n}: {len(moves)} quartics")
    return moves


@lru_cache(maxsize=16)
def cycle_catalog(n: int) -> tuple[Move, ...]:
    """Degree-2 partition moves followed by the cycle quartics."""
    return tuple(degree2_moves(cycle(n))) + cycle_quartics(n)


# ==========================================================
# Local moves
# ==========================================================

def _bits(cell: int, n: int) -> list[int]:
    return [bit_at(cell, n, k) for k in range(n)]


def _cell(bits: list[int]) -> int:
    cell = 0
    for b in bits:
        cell = (cell << 1) | b
    return cell


def _distance(x: int, y: int) -> int:
    return bin(x ^ y).count("1")


def _exchange(n: int, p: int, q: int, positions: range) -> tuple[int, int]:
    bp, bq = _bits(p, n), _bits(q, n)
    for k in positions:
        bp[k], bq[k] = bq[k], bp[k]
    return _cell(bp), _cell(bq)


def _swap(n: int, p: int, q: int, positions: range) -> Move | None:
    """Quadric exchanging `positions` between cells p and q, or None when that changes nothing."""
    p2, q2 = _exchange(n, p, q, positions)
    if p2 in (p, q):
        return None
    return Move(Table(n, (p2, q2)), Table(n, (p, q)))


class _Block:
    """Lowest block s..e of positions where anchor p disagrees with partner q."""

    def __init__(self, n: int, p: int, q: int):
        self.n = n
        self.p, self.q = _bits(p, n), _bits(q, n)
        self.s = next(k for k in range(n) if self.p[k] != self.q[k])
        e = self.s
        while self.p[e + 1] != self.q[e + 1]:
            e += 1
        self.e = e
        self.a, self.b = self.p[self.s - 1], self.p[e + 1]

    def window(self, cell: int) -> tuple[int, ...]:
        return tuple(_bits(cell, self.n)[self.s - 1: self.e + 2])

    def pattern(self, left: int, inner: list[int], right: int) -> tuple[int, ...]:
        return (left, *inner[self.s: self.e + 1], right)


def _from_start(n: int, t: Table, p: int, blk: _Block) -> list[Move] | None:
    """Quadric with a cell z carrying (a, q_s) on edge s-1..s that meets p again at some j <= e+1."""
    for z in sorted(t.support):
        bz = _bits(z, n)
        if (bz[blk.s - 1], bz[blk.s]) != (blk.a, blk.q[blk.s]):
            continue
        j = next((j for j in range(blk.s + 1, blk.e + 2) if bz[j] == blk.p[j]), None)
        move = None if j is None else _swap(n, p, z, range(blk.s, j))
        if move is not None:
            return [move]
    return None


def _from_end(n: int, t: Table, p: int, blk: _Block) -> list[Move] | None:
    """Mirror of `_from_start` on edge e..e+1."""
    for w in sorted(t.support):
        bw = _bits(w, n)
        if (bw[blk.e], bw[blk.e + 1]) != (blk.q[blk.e], blk.b):
            continue
        j = next((j for j in range(blk.e - 1, blk.s - 2, -1) if bw[j] == blk.p[j]), None)
        move = None if j is None else _swap(n, p, w, range(j + 1, blk.e + 1))
        if move is not None:
            return [move]
    return None


def _switch(n: int, t: Table, p: int, blk: _Block) -> list[Move] | None:
    """Quartic switching the block between p and cells with windows aQ(1-b), (1-a)Qb and (1-a)P(1-b)."""
    a, b = blk.a, blk.b
    wanted = [
        blk.pattern(a, blk.q, 1 - b),
        blk.pattern(1 - a, blk.q, b),
        blk.pattern(1 - a, blk.p, 1 - b),
    ]
    by_window = {}
    for c in sorted(t.support):
        by_window.setdefault(blk.window(c), c)
    if any(wd not in by_window for wd in wanted):
        return None
    minus = [p] + [by_window[wd] for wd in wanted]
    plus = []
    for c in minus:
        bits = _bits(c, n)
        source = blk.q if bits[blk.s] == blk.p[blk.s] else blk.p
        bits[blk.s: blk.e + 1] = source[blk.s: blk.e + 1]
        plus.append(_cell(bits))
    return [Move(Table(n, tuple(plus)), Table(n, tuple(minus)))]


def _routed(n: int, t: Table, p: int, blk: _Block) -> list[Move] | None:
    """
    Two quadrics through a cell v with window (1-a)Qb: first swap s..j-1 into v
    from a cell u carrying (1-a, p_s) that meets q at j, then swap s+1..e
    between p and v.
    """
    if blk.e == blk.s:
        return None
    v = next((c for c in sorted(t.support) if blk.window(c) == blk.pattern(1 - blk.a, blk.q, blk.b)), None)
    if v is None:
        return None
    for u in sorted(t.support):
        bu = _bits(u, n)
        if (bu[blk.s - 1], bu[blk.s]) != (1 - blk.a, blk.p[blk.s]):
            continue
        j = next((j for j in range(blk.s + 1, blk.e + 1) if bu[j] == blk.q[j]), None)
        if j is None:
            continue
        first = _swap(n, u, v, range(blk.s, j))
        _, v2 = _exchange(n, u, v, range(blk.s, j))
        second = _swap(n, p, v2, range(blk.s + 1, blk.e + 1))
        moves = [m for m in (first, second) if m is not None]
        return moves or None
    return None


LOCAL_MOVES = (_from_start, _from_end, _switch, _routed)


def _anchors(n: int, m: Table, w: Table) -> tuple[int, int]:
    """Closest pair x in m, y in w agreeing on vertices n-1 and 0, least first on ties."""
    ends = (1 << (n - 1)) | 1
    pairs = ((x, y) for x in m.support for y in w.support if (x ^ y) & ends == 0)
    return min(pairs, key=lambda xy: (_distance(*xy), xy))


def _local_step(n: int, m: Table, w: Table) -> tuple[int, list[Move]] | None:
    """
    Moves bringing the anchors of m and w closer, applied to m (side 0) or w
    (side 1); None when no local move applies.
    """
    x, y = _anchors(n, m, w)
    sides = ((m, x, y), (w, y, x))
    for local in LOCAL_MOVES:
        for side, (t, p, q) in enumerate(sides):
            moves = local(n, t, p, _Block(n, p, q))
            if moves:
                return side, moves
    return None


def cycle_reduce(n: int, t1: Table, t2: Table, cap: int | None = None) -> ReductionCertificate:
    """
    Connect two tables of one fiber of C_n using moves of degree 2 and 4.

    The steps taken from t2 are reversed and appended to those taken from t1.

    Args:
        n (int): Cycle length.
        t1 (Table): Start table.
        t2 (Table): End table.
        cap (int | None): Max tables visited by a catalog search round.

    Raises:
        ArgumentError: If the tables lie in different fibers.
        CatalogExhausted: If a catalog search round finds no path.
        BudgetExceeded: If a catalog search round visits more than `cap` tables.
    """
    check_same_fiber(cycle(n), t1, t2)
    cap = settings.FIBER_BUDGET if cap is None else cap
    forward: list[ReductionStep] = []
    backward: list[ReductionStep] = []
    m, w = t1, t2
    while True:
        common = m.gcd(w)
        rest_m, rest_w = m.minus(common), w.minus(common)
        if not rest_m.cells:
            break
        local = _local_step(n, rest_m, rest_w)
        if local is None:
            logger.debug(f"C_{n}: no local move between {rest_m} and {rest_w}, searching the catalog")
            reached, steps = search_shared_cell(rest_m, rest_w, list(cycle_catalog(n)), cap)
            forward.extend(steps)
            m = reached + common
            continue
        side, moves = local
        for move in moves:
            if side == 0:
                m = move.apply(m)
                forward.append(ReductionStep(move, 1))
            else:
                w = move.apply(w)
                backward.append(ReductionStep(move, 1))
    steps = forward + [ReductionStep(s.move, -s.sign) for s in reversed(backward)]
    logger.debug(f"C_{n}: certificate of length {len(steps)}")
    return ReductionCertificate(t1, t2, tuple(steps))
