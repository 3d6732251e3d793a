"""
Independent degree oracle for forests.

For a forest the quadratic binomials of the toric ideal form a Groebner basis
under graded reverse lexicographic order, with a squarefree initial ideal. The
standard monomials then describe a unimodular triangulation of the model
polytope: its maximal simplices are the sets of |V| + |E| + 1 cells that
contain no leading monomial p_a p_b. Counting them gives the normalized
volume, which is the degree.

Variables are ordered by cell number, p_(0...0) being the least.
"""
from __future__ import annotations

import logging
from itertools import combinations

import networkx as nx

from app.core.config import settings
from app.core.errors import CapabilityError
from app.models.graph import Graph
from app.models.table import Table
from app.services.fibers import degree_d_fibers
from app.services.graph_ops import is_forest

logger = logging.getLogger(__name__)


def grevlex_key(t: Table) -> tuple[int, ...]:
    """
    Sort key for monomials of one degree under graded reverse lex: the larger
    monomial has the smaller exponent at the least variable where they differ.
    """
    return tuple(-t.count(c) for c in range(1 << t.n))


def quadratic_leading_monomials(g: Graph) -> set[tuple[int, int]]:
    """Leading monomials p_a p_b of all quadratic binomials, as cell pairs."""
    leading: set[tuple[int, int]] = set()
    for tables in degree_d_fibers(g, 2, keep_singletons=False).values():
        least = min(tables, key=grevlex_key)
        for t in tables:
            if t != least:
                leading.add(tuple(t.cells))
    return leading


def compatibility_graph(g: Graph) -> nx.Graph:
    """Cells joined when their product is not a leading monomial."""
    leading = quadratic_leading_monomials(g)
    h = nx.Graph()
    h.add_nodes_from(range(1 << g.n))
    h.add_edges_from(p for p in combinations(range(1 << g.n), 2) if p not in leading)
    return h


def degree_oracle(g: Graph) -> int:
    """
    Degree of a forest's toric ideal by counting maximal simplices of the
    pulling triangulation.

    Raises:
        CapabilityError: If g is not a forest or exceeds the oracle caps.
    """
    if not is_forest(g):
        raise CapabilityError(f"{g} is not a forest")
    size = g.n + len(g.edges) + 1
    if (1 << g.n) > settings.ORACLE_MAX_CELLS or size > settings.ORACLE_MAX_CLIQUE:
        raise CapabilityError(
            f"oracle limited to {settings.ORACLE_MAX_CELLS} cells and cliques of "
            f"{settings.ORACLE_MAX_CLIQUE}; {g} needs {1 << g.n} and {size}"
        )
    h = compatibility_graph(g)
    count = 0
    for clique in nx.enumerate_all_cliques(h):
        if len(clique) > size:
            break
        if len(clique) == size:
            count += 1
    logger.info(f"{g}: {count} maximal simplices ({h.number_of_edges()} compatible pairs)")
    return count
