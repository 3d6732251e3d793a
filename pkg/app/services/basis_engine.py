"""
Degree-bounded computation of minimal generators and Markov width.

Minimal generators of degree d are counted fiber by fiber. Inside a degree-d
fiber, two tables are joined when they share a cell: dividing out the shared
cell leaves two tables of degree d - 1 in a common fiber, which the lower
degree generators already connect. The components of this relation are
therefore the components of the fiber under all moves of degree < d, and the
fiber needs (components - 1) new generators of degree d.

Used By:
    - `basis`, `width` and `reproduce-table` commands.
    - Certification of generator candidates in the structural classifier.
"""
from __future__ import annotations

import logging
import time
from functools import lru_cache
from typing import Iterable

from networkx.utils import UnionFind

from app.core.errors import BudgetExceeded, CapabilityError, PreconditionViolation
from app.models.basis import BasisReport, DegreeResult, FiberGraph, WidthStatus
from app.models.graph import Graph
from app.models.table import Move, Table
from app.services.fibers import degree_d_fibers, enumerate_fiber
from app.services.graph_ops import find_decompositions, is_cycle, is_forest, is_k2n
from app.services.marginals import is_move, marginals_of

logger = logging.getLogger(__name__)


# ==========================================================
# Fiber components
# ==========================================================

def shared_variable_components(tables: list[Table]) -> list[list[int]]:
    """
    Components of the "shares a cell" relation on `tables` (indices into the list).

    Components are sorted internally and ordered by their least index.
    """
    uf = UnionFind(range(len(tables)))
    owner: dict[int, int] = {}
    for i, t in enumerate(tables):
        for cell in t.support:
            if cell in owner:
                uf.union(owner[cell], i)
            else:
                owner[cell] = i
    comps = [sorted(c) for c in uf.to_sets()]
    return sorted(comps, key=lambda c: c[0])


def fiber_graph(tables: list[Table], moves: Iterable[Move]) -> FiberGraph:
    """Connect tables of one fiber that differ by a single signed move application."""
    nodes = tuple(sorted(tables))
    index = {t: i for i, t in enumerate(nodes)}
    moves = list(moves)
    uf = UnionFind(range(len(nodes)))
    edges: set[tuple[int, int]] = set()
    for i, t in enumerate(nodes):
        for m in moves:
            for sign in (1, -1):
                nxt = m.apply(t, sign)
                j = index.get(nxt) if nxt is not None else None
                if j is not None and j != i:
                    edges.add((min(i, j), max(i, j)))
                    uf.union(i, j)
    comps = sorted((tuple(sorted(c)) for c in uf.to_sets()), key=lambda c: c[0])
    return FiberGraph(nodes, tuple(sorted(edges)), tuple(comps))


# ==========================================================
# Minimal generators
# ==========================================================

def minimal_generators_at_degree(
    g: Graph,
    d: int,
    lower: list[Move] | None = None,
    budget: int | None = None,
) -> DegreeResult:
    """
    Count the minimal generators of degree d and pick one representative each.

    For each fiber, the representative moves join the least table of the first
    component to the least table of every other component; the two tables lie
    in different components, so their supports are disjoint.

    Args:
        g (Graph): Model graph.
        d (int): Degree.
        lower (list[Move] | None): Minimal generators of degree < d. When given,
            they must connect every degree-d fiber as far as the shared-cell
            relation does.
        budget (int | None): Monomial budget.

    Returns:
        DegreeResult: Count, representatives and number of nontrivial fibers.

    Raises:
        CapabilityError: If the monomial budget is exceeded.
        PreconditionViolation: If `lower` is incomplete.
    """
    fibers = degree_d_fibers(g, d, budget=budget, keep_singletons=False)
    count = 0
    reps: list[Move] = []
    for tables in fibers.values():
        comps = shared_variable_components(tables)
        if lower is not None:
            fg = fiber_graph(tables, (m for m in lower if m.degree < d))
            if len(fg.components) != len(comps):
                logger.error(f"lower move set leaves a degree-{d} fiber of {g} with {len(fg.components)} components")
                raise PreconditionViolation(
                    f"moves below degree {d} do not connect the fiber of {tables[0]}: "
                    f"{len(fg.components)} components, expected {len(comps)}"
                )
        count += len(comps) - 1
        base = tables[comps[0][0]]
        for comp in comps[1:]:
            reps.append(Move(base, tables[comp[0]]))
    logger.info(f"{g}: {count} minimal generators of degree {d} over {len(fibers)} fibers")
    return DegreeResult(degree=d, count=count, representatives=tuple(reps), fibers=len(fibers))


def minimal_generator_moves(g: Graph, d: int, budget: int | None = None) -> list[Move]:
    """
    Every binomial u - v (up to sign) whose monomials lie in distinct components
    of a degree-d fiber. These are all the binomials that can serve as a
    degree-d minimal generator.
    """
    out: list[Move] = []
    for tables in degree_d_fibers(g, d, budget=budget, keep_singletons=False).values():
        comps = shared_variable_components(tables)
        label = {i: k for k, comp in enumerate(comps) for i in comp}
        for i in range(len(tables)):
            for j in range(i + 1, len(tables)):
                if label[i] != label[j]:
                    out.append(Move(tables[i], tables[j]))
    return out


@lru_cache(maxsize=64)
def fiber_component_index(g: Graph, d: int, budget: int | None = None) -> dict[Table, tuple[int, int]]:
    """Map each table of a nontrivial degree-d fiber to (fiber id, component id)."""
    index: dict[Table, tuple[int, int]] = {}
    fibers = degree_d_fibers(g, d, budget=budget, keep_singletons=False)
    for f, tables in enumerate(fibers.values()):
        for k, comp in enumerate(shared_variable_components(tables)):
            for i in comp:
                index[tables[i]] = (f, k)
    return index


def certify_minimal(g: Graph, move: Move, cap: int | None = None) -> bool:
    """
    True iff `move` is a minimal generator: a valid move whose two monomials lie
    in different components of their fiber.
    """
    if not is_move(g, move):
        return False
    tables = enumerate_fiber(g, marginals_of(g, move.plus), cap)
    comps = shared_variable_components(tables)
    label = {tables[i]: k for k, comp in enumerate(comps) for i in comp}
    return label[move.plus] != label[move.minus]


# ==========================================================
# Width
# ==========================================================

@lru_cache(maxsize=1024)
def known_width_bound(g: Graph) -> int | None:
    """
    A degree beyond which no minimal generator can appear, when one is known:
    2 for forests, 4 for cycles and K_{2,n}, and the max over the pieces of a
    reducible graph whose pieces are all covered.
    """
    if is_forest(g):
        return 2
    if is_cycle(g) or is_k2n(g):
        return 4
    for dec in find_decompositions(g):
        g1, g2 = dec.pieces(g)
        b1, b2 = known_width_bound(g1), known_width_bound(g2)
        if b1 is not None and b2 is not None:
            return max(b1, b2)
    return None


def markov_basis_up_to(
    g: Graph,
    dmax: int,
    bound: int | None = None,
    budget: int | None = None,
    deadline: float | None = None,
) -> BasisReport:
    """
    Minimal generators of degrees 2..dmax and the Markov width they imply.

    The width is exact when every degree up to dmax completed and dmax reaches
    a known or caller-supplied bound; otherwise the largest degree with a
    generator is reported as a lower bound.

    Args:
        g (Graph): Model graph.
        dmax (int): Largest degree computed.
        bound (int | None): Externally justified width bound.
        budget (int | None): Monomial budget per degree.
        deadline (float | None): `time.monotonic()` value after which remaining
            degrees are skipped.
    """
    report = BasisReport(graph=g)
    for d in range(2, dmax + 1):
        if report.partial:
            report.per_degree[d] = DegreeResult(d, status="skipped", reason="earlier degree skipped")
            continue
        if deadline is not None and time.monotonic() > deadline:
            logger.warning(f"{g}: time budget exhausted before degree {d}")
            report.partial = True
            report.per_degree[d] = DegreeResult(d, status="skipped", reason="time budget exhausted")
            continue
        try:
            result = minimal_generators_at_degree(g, d, budget=budget)
        except (CapabilityError, BudgetExceeded) as exc:
            logger.warning(f"{g}: degree {d} skipped: {exc}")
            report.partial = True
            report.per_degree[d] = DegreeResult(d, status="skipped", reason=str(exc))
            continue
        report.per_degree[d] = result

    top = max((d for d, c in report.counts.items() if c), default=0)
    certified = bound if bound is not None else known_width_bound(g)
    exact = not report.partial and certified is not None and dmax >= certified
    report.width = WidthStatus(top, exact)
    logger.info(f"{g}: counts {report.counts}, width {'=' if exact else '>='} {top}")
    return report
