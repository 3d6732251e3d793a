"""
Degree of the toric ideal of a forest.

The degree equals the normalized volume of the model polytope, which has
dimension d(G) = |V| + |E|. It is computed from two rules:

- Product rule: for a disjoint union, deg(G1 + G2) = C(d1 + d2, d1) deg(G1) deg(G2),
  applied across all components at once as a multinomial coefficient.
- Edge rule: for a tree with at least one edge, deg(T) = 1/2 sum_e deg(T - e).

Tree degrees are memoized in the shared cache under a canonical rooted form,
so isomorphic subtrees are computed once.

Closed forms checked against the recursion:
    - star K_{1,n}: (n!)^2
    - path on n vertices: d_1 = 1, d_(n+1) = 1/2 sum_i C(2n, 2i - 1) d_i d_(n+1-i),
      whose exponential generating function is sqrt(2) tan(x / sqrt(2)).
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import comb, factorial, prod

import networkx as nx
import sympy

from app.core.errors import ArgumentError, CapabilityError
from app.models.forest import RationalSeries
from app.models.graph import Edge, Graph
from app.services import cache_service
from app.services.graph_ops import delete_edge, is_forest

logger = logging.getLogger(__name__)

MEMO_NAMESPACE = "tree_degree"


# ==========================================================
# Recursion
# ==========================================================

def dimension(g: Graph) -> int:
    """Dimension |V| + |E| of the model polytope."""
    return g.n + len(g.edges)


def tree_key(t: Graph) -> tuple:
    """Canonical form of a tree: least nested-tuple encoding over its centers."""
    if t.n == 1:
        return ()
    nxg = t.to_networkx()
    return min(nx.to_nested_tuple(nxg, c, canonical_form=True) for c in nx.center(nxg))


def components(g: Graph) -> list[Graph]:
    return [g.induced(c) for c in sorted(nx.connected_components(g.to_networkx()), key=min)]


def combine(parts: list[tuple[int, int]]) -> int:
    """Product rule over (dimension, degree) pairs."""
    total = sum(d for d, _ in parts)
    multinomial = factorial(total) // prod(factorial(d) for d, _ in parts)
    return multinomial * prod(deg for _, deg in parts)


def _tree_degree(t: Graph) -> int:
    if not t.edges:
        return 1
    key = tree_key(t)
    cached = cache_service.get_cache(MEMO_NAMESPACE, key)
    if cached is not None:
        return cached
    twice = sum(edge_terms(t).values())
    if twice % 2:
        logger.error(f"odd edge sum {twice} for tree {t}")
        raise ArithmeticError(f"edge sum {twice} of {t} is odd")
    value = twice // 2
    cache_service.set_cache(MEMO_NAMESPACE, key, value)
    return value


def edge_terms(g: Graph) -> dict[Edge, int]:
    """deg(G - e) for every edge e."""
    return {e: forest_degree(delete_edge(g, e)) for e in g.sorted_edges}


def forest_degree(g: Graph) -> int:
    """
    Exact degree of the toric ideal of a forest.

    Raises:
        CapabilityError: If g has a cycle.
    """
    if not is_forest(g):
        raise CapabilityError(f"{g} is not a forest")
    parts = components(g)
    if len(parts) == 1:
        return _tree_degree(parts[0])
    return combine([(dimension(t), _tree_degree(t)) for t in parts])


# ==========================================================
# Closed forms and series
# ==========================================================

def star_degree(n: int) -> int:
    """Degree for the star K_{1,n}: (n!)^2."""
    if n < 0:
        raise ArgumentError("star needs n >= 0 leaves")
    return factorial(n) ** 2


def chain_degrees(count: int) -> list[int]:
    """d_1..d_count for paths on 1..count vertices."""
    d = [0, 1]
    for n in range(1, count):
        d.append(sum(comb(2 * n, 2 * i - 1) * d[i] * d[n + 1 - i] for i in range(1, n + 1)) // 2)
    return d[1:count + 1]


def chain_degree(n: int) -> int:
    if n < 1:
        raise ArgumentError("chain needs n >= 1")
    return chain_degrees(n)[-1]


def tangent_series(count: int) -> RationalSeries:
    """
    Odd Taylor coefficients of sqrt(2) tan(x / sqrt(2)).

    tan z = sum a_k z^k with a_0 = 0 and (k + 1) a_(k+1) = [k == 0] + sum_(i+j=k) a_i a_j;
    substituting z = x / sqrt(2) and multiplying by sqrt(2) turns a_(2n-1)
    into a_(2n-1) / 2^(n-1).
    """
    top = 2 * count
    a = [Fraction(0)] * (top + 1)
    for k in range(top):
        s = sum((a[i] * a[k - i] for i in range(k + 1)), Fraction(0))
        a[k + 1] = (s + (1 if k == 0 else 0)) / (k + 1)
    return RationalSeries(tuple(a[2 * n - 1] / 2 ** (n - 1) for n in range(1, count + 1)))


def sympy_series(count: int) -> RationalSeries:
    """Same coefficients from a symbolic expansion."""
    x = sympy.Symbol("x")
    expr = sympy.sqrt(2) * sympy.tan(x / sympy.sqrt(2))
    poly = sympy.series(expr, x, 0, 2 * count + 1).removeO()
    coeffs = []
    for n in range(1, count + 1):
        c = sympy.Rational(sympy.expand(poly).coeff(x, 2 * n - 1))
        coeffs.append(Fraction(int(c.p), int(c.q)))
    return RationalSeries(tuple(coeffs))


def chain_series(count: int) -> RationalSeries:
    """d_n / (2n - 1)! for n = 1..count."""
    return RationalSeries(tuple(
        Fraction(d, factorial(2 * n - 1)) for n, d in enumerate(chain_degrees(count), start=1)
    ))


def gf_check(count: int) -> bool:
    """True iff d_n / (2n - 1)! equals the x^(2n-1) coefficient of sqrt(2) tan(x / sqrt(2)) for n <= count."""
    if count < 1:
        raise ArgumentError("series length must be >= 1")
    ok = chain_series(count) == tangent_series(count)
    logger.info(f"generating-function check up to n={count}: {'ok' if ok else 'MISMATCH'}")
    return ok
