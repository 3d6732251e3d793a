"""
Named graph catalog.

Provides the standard families (paths, cycles, stars, complete and complete
bipartite graphs), the gluing constructions used to build reducible graphs,
and every graph of the generator-count table under its table name.
"""
from __future__ import annotations

from itertools import combinations

from app.core.errors import ArgumentError
from app.models.graph import Graph, normalize_edge


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ArgumentError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with parts 0..m-1 and m..m+n-1."""
    return Graph.from_edges(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def empty(n: int) -> Graph:
    return Graph.from_edges(n)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g on 0..|g|-1 followed by h shifted by |g|."""
    g0, _ = g.relabeled()
    h0, _ = h.relabeled()
    shift = g0.n
    return Graph.from_edges(
        g0.n + h0.n,
        list(g0.edges) + [(a + shift, b + shift) for a, b in h0.edges],
    )


def glue(g: Graph, h: Graph, g_part: tuple[int, ...], h_part: tuple[int, ...]) -> Graph:
    """
    Identify the vertices `h_part` of h with `g_part` of g (a shared vertex or edge).

    Both parts are given in the 0..n-1 labels of the relabeled inputs.
    """
    if len(g_part) != len(h_part) or len(g_part) not in (1, 2):
        raise ArgumentError("glue along a single vertex or a single edge")
    g0, _ = g.relabeled()
    h0, _ = h.relabeled()
    if len(g_part) == 2 and not (g0.has_edge(*g_part) and h0.has_edge(*h_part)):
        raise ArgumentError("gluing parts must be edges of both graphs")
    mapping: dict[int, int] = dict(zip(h_part, g_part))
    nxt = g0.n
    for v in h0.vertices:
        if v not in mapping:
            mapping[v] = nxt
            nxt += 1
    edges = set(g0.edges) | {normalize_edge(mapping[a], mapping[b]) for a, b in h0.edges}
    return Graph.from_edges(nxt, edges)


def triangular_prism() -> Graph:
    """Two triangles 0-1-2 and 3-4-5 joined by the matching i - i+3."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def example_graph() -> Graph:
    """Path 0-1-2 plus the isolated vertex 3."""
    return Graph.from_edges(4, [(0, 1), (1, 2)])


def _one_based(n: int, pairs: str) -> Graph:
    return Graph.from_edges(n, ((int(p[0]) - 1, int(p[1]) - 1) for p in pairs.split()))


NAMED_GRAPHS: dict[str, Graph] = {
    "K3": complete(3),
    "C4": cycle(4),
    "K4": complete(4),
    "C5": cycle(5),
    "K23": complete_bipartite(2, 3),
    "K4~": _one_based(5, "12 15 23 24 34 35 45"),
    "SP": _one_based(5, "12 13 15 23 24 34 35 45"),
    "BP": _one_based(5, "12 13 15 23 24 25 34 35 45"),
    "K5": complete(5),
    "C6": cycle(6),
    "K24": complete_bipartite(2, 4),
    "G129": _one_based(6, "12 15 23 26 34 45 56"),
    "G151": _one_based(6, "12 14 23 26 34 36 45 46"),
    "G153": _one_based(6, "12 15 16 23 24 45 46 56"),
    "G154": _one_based(6, "12 14 23 25 34 36 45 56"),
    "example": example_graph(),
    "prism": triangular_prism(),
}


def named(name: str) -> Graph:
    """
    Look up a catalog graph by name.

    Besides the fixed names, accepts `P<n>`, `C<n>`, `K<n>`, `S<n>` (star with
    n leaves) and `K<m>,<n>`.
    """
    if name in NAMED_GRAPHS:
        return NAMED_GRAPHS[name]
    try:
        if name.startswith("K") and "," in name:
            m, n = name[1:].split(",")
            return complete_bipartite(int(m), int(n))
        size = int(name[1:])
    except ValueError:
        raise ArgumentError(f"unknown graph name {name!r}")
    builders = {"P": path, "C": cycle, "K": complete, "S": star}
    if name[0] not in builders:
        raise ArgumentError(f"unknown graph name {name!r}")
    return builders[name[0]](size)
