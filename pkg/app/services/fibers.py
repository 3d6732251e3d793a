"""
Fiber enumeration and degree-d fiber grouping.

- `enumerate_fiber` lists every nonnegative table with a given marginal vector
  by depth-first assignment of cell counts with marginal pruning.
- `degree_d_fibers` streams all degree-d monomials, hashes their packed
  marginal codes, and groups them into fibers.

Both return tables in increasing order so that downstream choices
(representatives, witness pairs) are deterministic.
"""
from __future__ import annotations

import logging
from collections import Counter, defaultdict
from itertools import combinations_with_replacement
from math import comb

from app.core.config import settings
from app.core.errors import ArgumentError, BudgetExceeded, CapabilityError
from app.models.graph import Graph
from app.models.table import MarginalVector, Table
from app.services.marginals import field_width, layout

logger = logging.getLogger(__name__)


def monomial_count(g: Graph, d: int) -> int:
    """Number of degree-d monomials in the 2^n cell variables."""
    return comb((1 << g.n) + d - 1, d)


def enumerate_fiber(g: Graph, mv: MarginalVector, cap: int | None = None) -> list[Table]:
    """
    All tables whose marginals equal `mv`, sorted.

    Cells are assigned in binary order; a branch is cut as soon as a count would
    exceed a remaining marginal, or a row still has a positive remainder that no
    later cell can fill.

    Args:
        g (Graph): Model graph.
        mv (MarginalVector): Target marginals.
        cap (int | None): Max tables; defaults to FIBER_BUDGET.

    Returns:
        list[Table]: The fiber.

    Raises:
        ArgumentError: If `mv` does not belong to `g`.
        BudgetExceeded: With the tables found so far as `partial`.
    """
    lay = layout(g)
    if (mv.edges, mv.isolated) != (g.sorted_edges, g.isolated):
        raise ArgumentError("marginal vector does not belong to this graph")
    cap = settings.FIBER_BUDGET if cap is None else cap
    n_cells = lay.n_cells
    cell_rows = lay.cell_rows
    degree = mv.total

    # rows reachable from cell i onwards
    reach = [0] * (n_cells + 1)
    for i in range(n_cells - 1, -1, -1):
        mask = reach[i + 1]
        for r in cell_rows[i]:
            mask |= 1 << r
        reach[i] = mask

    remaining = list(mv.counts)
    chosen: list[int] = []
    found: list[Table] = []

    def open_rows() -> int:
        mask = 0
        for r, k in enumerate(remaining):
            if k:
                mask |= 1 << r
        return mask

    def walk(i: int, left: int) -> None:
        if left == 0:
            if not any(remaining):
                found.append(Table(g.n, tuple(chosen)))
                if len(found) > cap:
                    raise BudgetExceeded("fiber enumeration over budget", len(found), sorted(found))
            return
        # cells touching an exhausted row are forced to 0
        while i < n_cells and not all(remaining[r] for r in cell_rows[i]):
            i += 1
        if i == n_cells or open_rows() & ~reach[i]:
            return
        rows = cell_rows[i]
        top = min(left, *(remaining[r] for r in rows))
        for k in range(top, -1, -1):
            for r in rows:
                remaining[r] -= k
            chosen.extend([i] * k)
            walk(i + 1, left - k)
            del chosen[len(chosen) - k:]
            for r in rows:
                remaining[r] += k

    walk(0, degree)
    found.sort()
    logger.debug(f"fiber of degree {degree} on {g}: {len(found)} tables")
    return found


def iter_monomials(g: Graph, d: int):
    """Degree-d tables in increasing order, as sorted cell tuples."""
    return combinations_with_replacement(range(1 << g.n), d)


def degree_d_fibers(
    g: Graph,
    d: int,
    budget: int | None = None,
    keep_singletons: bool = True,
) -> dict[MarginalVector, list[Table]]:
    """
    Group every degree-d table by its marginals.

    With `keep_singletons=False` a first pass counts bucket sizes and a second
    pass materializes only buckets with at least two tables.

    Args:
        g (Graph): Model graph.
        d (int): Degree.
        budget (int | None): Max monomials; defaults to MONOMIAL_BUDGET.
        keep_singletons (bool): Whether to return one-table fibers.

    Returns:
        dict[MarginalVector, list[Table]]: Fibers keyed by marginals, in order of
        their least table; tables sorted inside each fiber.

    Raises:
        CapabilityError: If the monomial count exceeds the budget.
    """
    budget = settings.MONOMIAL_BUDGET if budget is None else budget
    total = monomial_count(g, d)
    if total > budget:
        raise CapabilityError(
            f"degree {d} on {g.n} vertices needs {total} monomials, budget is {budget}"
        )
    lay = layout(g)
    width = field_width(d)
    codes = lay.packed_codes(width)

    if keep_singletons:
        wanted = None
    else:
        sizes = Counter(sum(codes[c] for c in mono) for mono in iter_monomials(g, d))
        wanted = {k for k, s in sizes.items() if s >= 2}
        del sizes

    buckets: dict[int, list[Table]] = defaultdict(list)
    for mono in iter_monomials(g, d):
        key = sum(codes[c] for c in mono)
        if wanted is None or key in wanted:
            buckets[key].append(Table(g.n, mono))

    logger.info(f"degree {d} on {g}: {total} monomials, {len(buckets)} fibers kept")
    return {lay.vector(lay.unpack(k, width)): tables for k, tables in buckets.items()}
