"""
The complete bipartite graph K_{2,n}: reduction certificates built from moves
of degree 2 and 4.

Vertices 0 and 1 form the two-element side {v_1, v_2}; vertices 2..n+1 are
w_1..w_n. For a table M, the cells whose v-coordinates are ij form the class
M_ij; a_ij(M) counts them and b_(ij,k,l)(M) counts those among them whose w_l
coordinate is k.

A reduction first brings both tables to reduced form, where neither the
column shuffle through a triangle minor nor the quadric merging classes 10
and 01 into 11 and 00 applies. Both moves raise a_11 + sum_l b_(11,1,l), so
this ends. Two reduced tables of one fiber then have a cell in common up to
single-coordinate swaps inside one class: class 11 when both have it,
otherwise 10, 01 or 00. That cell is gathered on both sides and divided out,
and the procedure repeats on what is left.
"""
from __future__ import annotations

import logging
from collections import Counter, defaultdict
from functools import lru_cache

from app.core.config import settings
from app.core.errors import ArgumentError, BudgetExceeded
from app.models.certificate import ReductionCertificate, ReductionStep
from app.models.table import Move, Table, bit_at
from app.services.catalog import complete_bipartite
from app.services.certificates import CatalogExhausted, check_same_fiber
from app.services.classifier import degree2_moves, triangle_quartics

logger = logging.getLogger(__name__)

Class = tuple[int, int]
CLASSES: tuple[Class, ...] = ((1, 1), (1, 0), (0, 1), (0, 0))


def k2n_profile(n: int, t: Table) -> tuple[Counter, Counter]:
    """
    The counts (a, b) of a table on K_{2,n}.

    Returns:
        tuple[Counter, Counter]: a[(i, j)] and b[(i, j, k, l)] with l in 1..n.
    """
    if t.n != n + 2:
        raise ArgumentError(f"table has {t.n} coordinates, K_(2,{n}) has {n + 2}")
    a: Counter = Counter()
    b: Counter = Counter()
    for cell in t.cells:
        ij = (bit_at(cell, t.n, 0), bit_at(cell, t.n, 1))
        a[ij] += 1
        for l in range(1, n + 1):
            b[(*ij, bit_at(cell, t.n, l + 1), l)] += 1
    return a, b


@lru_cache(maxsize=16)
def k2n_catalog(n: int) -> tuple[Move, ...]:
    """Degree-2 partition moves followed by the quartic shuffles through triangle minors."""
    if n < 1:
        raise ArgumentError(f"K_(2,n) needs n >= 1, got {n}")
    g = complete_bipartite(2, n)
    moves = tuple(degree2_moves(g)) + tuple(triangle_quartics(g))
    logger.info(f"K_(2,{n}): catalog of {len(moves)} moves")
    return moves


# ==========================================================
# Cells
# ==========================================================

def _class_of(cell: int, n: int) -> Class:
    return bit_at(cell, n + 2, 0), bit_at(cell, n + 2, 1)


def _column(cell: int, n: int, l: int) -> int:
    return bit_at(cell, n + 2, l + 1)


def _with_column(cell: int, n: int, l: int, k: int) -> int:
    mask = 1 << (n - l)
    return cell | mask if k else cell & ~mask


def _cells(n: int, t: Table, ij: Class) -> list[int]:
    return [c for c in t.cells if _class_of(c, n) == ij]


def _supports(n: int, t: Table) -> dict[tuple[int, int, int], set[int]]:
    """c_(ij,l): the digits found at w_l among the cells of class ij."""
    _, b = k2n_profile(n, t)
    out: dict[tuple[int, int, int], set[int]] = defaultdict(set)
    for (i, j, k, l), count in b.items():
        if count:
            out[(i, j, l)].add(k)
    return out


def _cell(n: int, ij: Class, digits: list[int]) -> int:
    cell = (ij[0] << (n + 1)) | (ij[1] << n)
    for l, k in enumerate(digits, start=1):
        cell = _with_column(cell, n, l, k)
    return cell


# ==========================================================
# Moves
# ==========================================================

def _gather(n: int, t: Table, ij: Class, digits: list[int]) -> tuple[Table, list[ReductionStep]]:
    """
    Make class ij of t contain the cell with w-digits `digits`, swapping one
    w-coordinate between two cells of the class at a time. Each digit must
    already occur at its column within the class.
    """
    steps: list[ReductionStep] = []
    x = min(_cells(n, t, ij))
    for l, want in enumerate(digits, start=1):
        have = _column(x, n, l)
        if have == want:
            continue
        y = min(c for c in _cells(n, t, ij) if _column(c, n, l) == want)
        x2, y2 = _with_column(x, n, l, want), _with_column(y, n, l, have)
        if x2 == y:
            x = y
            continue
        move = Move(Table(n + 2, (x2, y2)), Table(n + 2, (x, y)))
        t = move.apply(t)
        steps.append(ReductionStep(move, 1))
        x = x2
    return t, steps


def _shuffle(n: int, t: Table) -> Move | None:
    """
    The quartic flipping w_l in one cell of each class, at the lowest column l
    where class 01 and 10 hold a 1 there and class 00 and 11 a 0.
    """
    wanted = {(0, 1): 1, (1, 0): 1, (0, 0): 0, (1, 1): 0}
    for l in range(1, n + 1):
        picks = [
            min((c for c in _cells(n, t, ij) if _column(c, n, l) == k), default=None)
            for ij, k in wanted.items()
        ]
        if None in picks:
            continue
        flipped = [_with_column(c, n, l, 1 - _column(c, n, l)) for c in picks]
        return Move(Table(n + 2, tuple(flipped)), Table(n + 2, tuple(picks)))
    return None


def _merge(n: int, t: Table) -> tuple[Table, list[ReductionStep]] | None:
    """
    When every column l has a digit i_l shared by classes 10 and 01, gather
    the cells 10I and 01I for I = (i_1..i_n) and trade them for 11I and 00I.
    """
    supports = _supports(n, t)
    digits = []
    for l in range(1, n + 1):
        shared = supports[(1, 0, l)] & supports[(0, 1, l)]
        if not shared:
            return None
        digits.append(min(shared))
    t, steps = _gather(n, t, (1, 0), digits)
    t, more = _gather(n, t, (0, 1), digits)
    move = Move(
        Table(n + 2, (_cell(n, (1, 1), digits), _cell(n, (0, 0), digits))),
        Table(n + 2, (_cell(n, (1, 0), digits), _cell(n, (0, 1), digits))),
    )
    return move.apply(t), steps + more + [ReductionStep(move, 1)]


def _reduce_profile(n: int, t: Table) -> tuple[Table, list[ReductionStep]]:
    steps: list[ReductionStep] = []
    while True:
        move = _shuffle(n, t)
        if move is not None:
            t = move.apply(t)
            steps.append(ReductionStep(move, 1))
            continue
        merged = _merge(n, t)
        if merged is None:
            return t, steps
        t, more = merged
        steps.extend(more)


def _shared_cell(n: int, m: Table, w: Table) -> tuple[Class, list[int]]:
    """
    Class and w-digits of a cell both reduced tables can gather.

    Raises:
        CatalogExhausted: If the tables are not both reduced members of one fiber.
    """
    a_m, _ = k2n_profile(n, m)
    a_w, _ = k2n_profile(n, w)
    if a_m[(1, 1)] and a_w[(1, 1)]:
        ij = (1, 1)
    elif a_m[(1, 1)] or a_w[(1, 1)]:
        raise CatalogExhausted(f"only one of {m} and {w} keeps class 11 after reduction")
    else:
        ij = next(c for c in CLASSES[1:] if a_m[c])
    s_m, s_w = _supports(n, m), _supports(n, w)
    digits = []
    for l in range(1, n + 1):
        shared = s_m[(*ij, l)] & s_w[(*ij, l)]
        if not shared:
            raise CatalogExhausted(f"class {ij} of {m} and {w} disagrees at w_{l}")
        digits.append(min(shared))
    return ij, digits


# ==========================================================
# Reduction
# ==========================================================

def k2n_reduce(n: int, t1: Table, t2: Table, cap: int | None = None) -> ReductionCertificate:
    """
    Connect two tables of one fiber of K_{2,n} with moves of degree 2 and 4.

    The steps taken from t2 are reversed and appended to those taken from t1.

    Args:
        n (int): Size of the larger side.
        t1 (Table): Start table.
        t2 (Table): End table.
        cap (int | None): Max certificate steps; FIBER_BUDGET by default.

    Raises:
        ArgumentError: If the tables lie in different fibers.
        CatalogExhausted: If reduced tables admit no shared cell.
        BudgetExceeded: If the certificate grows past `cap` steps.
    """
    g = complete_bipartite(2, n)
    check_same_fiber(g, t1, t2)
    cap = settings.FIBER_BUDGET if cap is None else cap
    forward: list[ReductionStep] = []
    backward: list[ReductionStep] = []
    m, w = t1, t2
    while True:
        common = m.gcd(w)
        rest_m, rest_w = m.minus(common), w.minus(common)
        if not rest_m.cells:
            break
        rest_m, steps = _reduce_profile(n, rest_m)
        forward.extend(steps)
        rest_w, steps = _reduce_profile(n, rest_w)
        backward.extend(steps)
        if not rest_m.gcd(rest_w).cells:
            ij, digits = _shared_cell(n, rest_m, rest_w)
            rest_m, steps = _gather(n, rest_m, ij, digits)
            forward.extend(steps)
            rest_w, steps = _gather(n, rest_w, ij, digits)
            backward.extend(steps)
        m, w = rest_m + common, rest_w + common
        if len(forward) + len(backward) > cap:
            raise BudgetExceeded("reduction exceeded the step budget", len(forward) + len(backward))
    steps = forward + [ReductionStep(s.move, -s.sign) for s in reversed(backward)]
    logger.debug(f"K_(2,{n}): certificate of length {len(steps)}")
    return ReductionCertificate(t1, t2, tuple(steps))
