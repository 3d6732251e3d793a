"""
Proper 3-colorings and the 3-coloring graph.

Two proper colorings are adjacent in the 3-coloring graph when one is obtained
from the other by picking a color i, picking a connected component of the
subgraph induced by the vertices not colored i, and swapping the other two
colors on that component. A graph is 3-rigid when this graph is disconnected.
"""
from __future__ import annotations

import logging
from functools import lru_cache

import networkx as nx
from networkx.utils import UnionFind

from app.core.config import settings
from app.core.errors import CapabilityError
from app.models.classifier import ColoringGraphComponent
from app.models.graph import Graph

logger = logging.getLogger(__name__)

Coloring = tuple[int, ...]


def proper_colorings(g: Graph) -> list[Coloring]:
    """
    All proper colorings with colors {0, 1, 2}, one entry per vertex position,
    in lexicographic order.

    Raises:
        CapabilityError: If g has more than MAX_COLORING_VERTICES vertices.
    """
    if g.n > settings.MAX_COLORING_VERTICES:
        raise CapabilityError(f"3-coloring enumeration is limited to {settings.MAX_COLORING_VERTICES} vertices")
    pos = g.position
    earlier = [[pos[w] for w in g.neighbors(v) if pos[w] < pos[v]] for v in g.vertices]
    out: list[Coloring] = []
    current = [0] * g.n

    def extend(i: int) -> None:
        if i == g.n:
            out.append(tuple(current))
            return
        for color in range(3):
            if all(current[j] != color for j in earlier[i]):
                current[i] = color
                extend(i + 1)

    extend(0)
    return out


def kempe_neighbors(g: Graph, coloring: Coloring) -> set[Coloring]:
    """Colorings reachable by one two-color swap on a connected component."""
    out = set()
    nxg = g.to_networkx()
    pos = g.position
    for fixed in range(3):
        a, b = [c for c in range(3) if c != fixed]
        keep = [v for v in g.vertices if coloring[pos[v]] != fixed]
        for comp in nx.connected_components(nxg.subgraph(keep)):
            swapped = list(coloring)
            for v in comp:
                k = pos[v]
                swapped[k] = b if coloring[k] == a else a
            out.add(tuple(swapped))
    out.discard(coloring)
    return out


@lru_cache(maxsize=2048)
def coloring_graph_components(g: Graph) -> tuple[ColoringGraphComponent, ...]:
    """
    Components of the 3-coloring graph, ordered by their least coloring.

    Graphs without a proper 3-coloring give an empty tuple.
    """
    colorings = proper_colorings(g)
    index = {c: i for i, c in enumerate(colorings)}
    uf = UnionFind(range(len(colorings)))
    for i, c in enumerate(colorings):
        for other in kempe_neighbors(g, c):
            uf.union(i, index[other])
    comps = sorted((sorted(s) for s in uf.to_sets()), key=lambda s: s[0])
    result = tuple(ColoringGraphComponent(colorings[s[0]], len(s)) for s in comps)
    logger.debug(f"{g}: {len(colorings)} colorings in {len(result)} components")
    return result


def is_3rigid(g: Graph) -> bool:
    """True iff the 3-coloring graph has at least two components."""
    return len(coloring_graph_components(g)) >= 2
