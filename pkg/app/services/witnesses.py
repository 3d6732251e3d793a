"""
High-degree witness binomials.

- `km_witness(m)`: a move of degree 2m - 2 on K_m whose fiber has exactly two
  tables, so it belongs to every Markov basis and mu(K_m) >= 2m - 2.
- `kmn_witness(m)`: a move of degree 2^(m-1) on K_{m,N}, N = C(m,2) * 2^(m-2),
  built from the even-weight and odd-weight strings of length m.
"""
from __future__ import annotations

import logging
from itertools import product

from app.core.errors import ArgumentError, CapabilityError
from app.models.graph import Graph
from app.models.table import Move, Table
from app.services.catalog import complete_bipartite

logger = logging.getLogger(__name__)

MAX_KMN_WITNESS = 4


def km_witness(m: int) -> Move:
    """
    p_0^(m-2) * prod_i p_(1-e_i)  -  p_1^(m-2) * prod_i p_(e_i)  on K_m.

    Raises:
        ArgumentError: If m < 3.
    """
    if m < 3:
        raise ArgumentError(f"K_m witness needs m >= 3, got {m}")
    full = (1 << m) - 1
    units = [1 << (m - 1 - i) for i in range(m)]
    plus = Table(m, tuple([0] * (m - 2) + [full ^ e for e in units]))
    minus = Table(m, tuple([full] * (m - 2) + units))
    return Move(plus, minus)


def witness_index_strings(m: int) -> list[str]:
    """Strings over {0, 1, 2} of length m with exactly two 1's, in lexicographic order."""
    return [
        "".join(s) for s in product("012", repeat=m) if s.count("1") == 2
    ]


def kmn_witness(m: int) -> tuple[Graph, Move]:
    """
    Witness of degree 2^(m-1) on K_{m,N}.

    Vertices 0..m-1 are v_1..v_m; vertex m + k is w_I for the k-th string of
    `witness_index_strings(m)`. The plus table holds the even-weight strings x
    on the v side, the minus table the odd-weight ones; w_I is 1 exactly when
    x agrees with I on every position where I is 0 or 2.

    Raises:
        ArgumentError: If m < 2.
        CapabilityError: If m > 4.
    """
    if m < 2:
        raise ArgumentError(f"K_(m,n) witness needs m >= 2, got {m}")
    if m > MAX_KMN_WITNESS:
        raise CapabilityError(f"K_(m,n) witness is limited to m <= {MAX_KMN_WITNESS}")
    strings = witness_index_strings(m)
    big = len(strings)
    g = complete_bipartite(m, big)
    n = m + big

    def row(x: tuple[int, ...]) -> int:
        cell = 0
        for j, bit in enumerate(x):
            cell |= bit << (n - 1 - j)
        for k, index in enumerate(strings):
            if all(x[j] == int(c) // 2 for j, c in enumerate(index) if c != "1"):
                cell |= 1 << (n - 1 - m - k)
        return cell

    even, odd = [], []
    for x in product((0, 1), repeat=m):
        (even if sum(x) % 2 == 0 else odd).append(row(x))
    move = Move(Table(n, tuple(even)), Table(n, tuple(odd)))
    logger.info(f"K_({m},{big}) witness of degree {move.degree}")
    return g, move
