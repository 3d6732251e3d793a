"""
Backtracking search for graph homomorphisms G -> H.

Vertices of G are branched on in an order that maximizes, at each step, the
number of already ordered neighbors (ties broken by larger degree, then by
label). Each vertex's candidates are the common neighbors in H of the images
of its ordered neighbors, so every completed assignment is a homomorphism.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from app.core.config import settings
from app.models.graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomomorphismSearch:
    """
    Result of a homomorphism search.

    Attributes:
        maps (tuple[tuple[int, ...], ...]): Images of g.vertices, in vertex order.
        truncated (bool): True when the budget stopped the search.
    """
    maps: tuple[tuple[int, ...], ...]
    truncated: bool = False


def order_max_adjacent(g: Graph) -> list[int]:
    """Branching order: most neighbors among the ordered prefix first."""
    ordered: list[int] = []
    placed: set[int] = set()
    rest = set(g.vertices)
    while rest:
        v = max(rest, key=lambda w: (len(g.neighbors(w) & placed), g.degree(w), -w))
        ordered.append(v)
        placed.add(v)
        rest.remove(v)
    return ordered


def is_homomorphism(g: Graph, h: Graph, images: dict[int, int]) -> bool:
    if set(images) != set(g.vertices) or not set(images.values()) <= set(h.vertices):
        return False
    return all(h.has_edge(images[u], images[v]) for u, v in g.edges)


def homomorphisms(
    g: Graph,
    h: Graph,
    budget: int | None = None,
    first_choices: Iterable[int] | None = None,
) -> HomomorphismSearch:
    """
    All homomorphisms from g to h.

    Args:
        g (Graph): Source graph.
        h (Graph): Target graph.
        budget (int | None): Max maps; defaults to HOMOMORPHISM_BUDGET.
        first_choices (Iterable[int] | None): Restrict the image of the first
            vertex in branching order (used to quotient by symmetries of h).

    Returns:
        HomomorphismSearch: Maps as image tuples aligned with g.vertices.
    """
    budget = settings.HOMOMORPHISM_BUDGET if budget is None else budget
    if g.n == 0:
        return HomomorphismSearch(((),))
    order = order_max_adjacent(g)
    earlier = {v: [u for u in order[:i] if u in g.neighbors(v)] for i, v in enumerate(order)}
    all_targets = frozenset(h.vertices)
    first = frozenset(first_choices) if first_choices is not None else all_targets
    pos = g.position
    images: dict[int, int] = {}
    found: list[tuple[int, ...]] = []
    truncated = False

    def extend(i: int) -> bool:
        nonlocal truncated
        if i == len(order):
            if len(found) >= budget:
                truncated = True
                return False
            image = [0] * g.n
            for v, w in images.items():
                image[pos[v]] = w
            found.append(tuple(image))
            return True
        v = order[i]
        cands = first if i == 0 else all_targets
        for u in earlier[v]:
            cands = cands & h.neighbors(images[u])
        for w in sorted(cands):
            images[v] = w
            if not extend(i + 1):
                return False
        images.pop(v, None)
        return True

    extend(0)
    if truncated:
        logger.warning(f"homomorphism search {g} -> {h} truncated at {budget} maps")
    return HomomorphismSearch(tuple(found), truncated)
