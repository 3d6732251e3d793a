"""
This module implements the graph-core operations: vertex deletion, edge
contraction, minor enumeration and realizations, canonical forms,
automorphisms, reducible decompositions, forest detection and treewidth.

All functions are pure: they take immutable `Graph` values and return new ones.

Minors here are obtained by vertex deletions and edge contractions only. Edge
deletion is available behind `allow_edge_deletion` for exploratory use and is
never used by the generator pipeline.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from app.core.config import settings
from app.core.errors import ArgumentError, CapabilityError
from app.models.graph import Decomposition, Edge, Graph, MinorStep, MinorTrace, normalize_edge

logger = logging.getLogger(__name__)

CanonicalForm = tuple[int, tuple[Edge, ...]]


# ==========================================================
# Elementary operations
# ==========================================================

def delete_vertex(g: Graph, v: int) -> Graph:
    """
    Remove `v` and its incident edges.

    Raises:
        ArgumentError: If `v` is not a vertex of `g`.
    """
    if not g.has_vertex(v):
        raise ArgumentError(f"unknown vertex {v}")
    return Graph(
        tuple(w for w in g.vertices if w != v),
        frozenset(e for e in g.edges if v not in e),
    )


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """
    Merge the endpoints of `e` into its smaller endpoint.

    Parallel edges collapse and the contracted edge disappears, so the result is
    again simple.

    Raises:
        ArgumentError: If `e` is not an edge of `g`.
    """
    u, v = normalize_edge(*e)
    if (u, v) not in g.edges:
        raise ArgumentError(f"{(u, v)} is not an edge")
    new_edges = set()
    for a, b in g.edges:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            new_edges.add(normalize_edge(a, b))
    return Graph(tuple(w for w in g.vertices if w != v), frozenset(new_edges))


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Remove one edge, keeping both endpoints (exploratory only)."""
    edge = normalize_edge(*e)
    if edge not in g.edges:
        raise ArgumentError(f"{edge} is not an edge")
    return Graph(g.vertices, g.edges - {edge})


def _apply_step(g: Graph, step: MinorStep) -> tuple[Graph, dict[int, int | None]]:
    """Apply one step and return the result plus the per-vertex map of that step."""
    if step.kind == "delete":
        (v,) = step.vertices
        return delete_vertex(g, v), {w: (None if w == v else w) for w in g.vertices}
    if step.kind == "contract":
        u, v = normalize_edge(*step.vertices)
        return contract_edge(g, (u, v)), {w: (u if w == v else w) for w in g.vertices}
    if step.kind == "delete_edge":
        return delete_edge(g, step.vertices), {w: w for w in g.vertices}
    raise ArgumentError(f"unknown minor step {step.kind!r}")


def _compose(vmap: dict[int, int | None], step_map: dict[int, int | None]) -> dict[int, int | None]:
    return {v: (None if w is None else step_map[w]) for v, w in vmap.items()}


def make_trace(base: Graph, steps: list[MinorStep]) -> MinorTrace:
    """Replay `steps` from `base` and package the result as a trace."""
    g = base
    vmap: dict[int, int | None] = {v: v for v in base.vertices}
    for step in steps:
        g, step_map = _apply_step(g, step)
        vmap = _compose(vmap, step_map)
    return MinorTrace(base, tuple(steps), g, tuple(sorted(vmap.items())))


def replay_trace(trace: MinorTrace) -> Graph:
    """Recompute the result graph of a trace from its base and steps."""
    return make_trace(trace.base, list(trace.steps)).result


# ==========================================================
# Canonical forms and automorphisms
# ==========================================================

@lru_cache(maxsize=4096)
def canonical_form(g: Graph) -> CanonicalForm:
    """
    Canonical label sequence of `g`: (n, lexicographically least relabeled edge list).

    Relabelings range over the vertex orders that list vertices by nondecreasing
    degree, trying every order inside each degree class. Isomorphic graphs get
    equal forms.
    """
    by_degree: dict[int, list[int]] = {}
    for v in g.vertices:
        by_degree.setdefault(g.degree(v), []).append(v)
    classes = [by_degree[k] for k in sorted(by_degree)]

    best: tuple[Edge, ...] | None = None
    for choice in product(*(permutations(c) for c in classes)):
        order = [v for block in choice for v in block]
        label = {v: i for i, v in enumerate(order)}
        edges = tuple(sorted(normalize_edge(label[a], label[b]) for a, b in g.edges))
        if best is None or edges < best:
            best = edges
    return g.n, best or ()


def graph_from_form(form: CanonicalForm) -> Graph:
    n, edges = form
    return Graph.from_edges(n, edges)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return canonical_form(g) == canonical_form(h)


def automorphisms(g: Graph) -> list[dict[int, int]]:
    """All automorphisms of `g` as vertex maps, found with VF2."""
    nxg = g.to_networkx()
    return [dict(sorted(m.items())) for m in GraphMatcher(nxg, nxg).isomorphisms_iter()]


# ==========================================================
# Minors
# ==========================================================

@dataclass(frozen=True)
class MinorEnumeration:
    """
    Minors of a graph up to isomorphism.

    Attributes:
        minors (tuple[tuple[Graph, MinorTrace], ...]): One labeled graph and one
            witnessing trace per isomorphism class.
        truncated (bool): True when `max_out` stopped the enumeration early.
    """
    minors: tuple[tuple[Graph, MinorTrace], ...]
    truncated: bool = False

    def forms(self) -> set[CanonicalForm]:
        return {canonical_form(h) for h, _ in self.minors}


def _one_step_successors(g: Graph, allow_edge_deletion: bool) -> Iterator[MinorStep]:
    if g.n > 1:
        for v in g.vertices:
            yield MinorStep("delete", (v,))
    for e in g.sorted_edges:
        yield MinorStep("contract", e)
    if allow_edge_deletion:
        for e in g.sorted_edges:
            yield MinorStep("delete_edge", e)


def enumerate_minors(
    g: Graph,
    max_out: int | None = None,
    allow_edge_deletion: bool = False,
) -> MinorEnumeration:
    """
    All nonempty minors of `g` up to isomorphism, `g` itself included.

    Breadth-first search over isomorphism classes: a minor of a minor is a
    minor, so one labeled representative per class suffices.

    Args:
        g (Graph): Base graph.
        max_out (int | None): Stop after this many classes.
        allow_edge_deletion (bool): Also delete single edges (experimental).

    Returns:
        MinorEnumeration: Minors sorted by canonical form, with a truncation flag.
    """
    if g.n == 0:
        return MinorEnumeration(())
    root = make_trace(g, [])
    found: dict[CanonicalForm, MinorTrace] = {canonical_form(g): root}
    queue = deque([root])
    truncated = False
    while queue and not truncated:
        trace = queue.popleft()
        for step in _one_step_successors(trace.result, allow_edge_deletion):
            child = make_trace(g, list(trace.steps) + [step])
            form = canonical_form(child.result)
            if form in found:
                continue
            if max_out is not None and len(found) >= max_out:
                truncated = True
                logger.warning(f"Minor enumeration of {g} truncated at {max_out} classes")
                break
            found[form] = child
            queue.append(child)
    minors = tuple((found[f].result, found[f]) for f in sorted(found))
    logger.debug(f"{len(minors)} minors of {g}")
    return MinorEnumeration(minors, truncated)


def _connected_subsets_containing(g: Graph, root: int, pool: frozenset[int]) -> Iterator[frozenset[int]]:
    """Every connected vertex set S with root in S and S a subset of pool."""
    others = sorted(pool - {root})
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            block = frozenset((root, *extra))
            if len(block) == 1 or nx.is_connected(g.induced(block).to_networkx()):
                yield block


def _connected_partitions(g: Graph, pool: frozenset[int]) -> Iterator[list[frozenset[int]]]:
    if not pool:
        yield []
        return
    root = min(pool)
    for block in _connected_subsets_containing(g, root, pool):
        for rest in _connected_partitions(g, pool - block):
            yield [block, *rest]


def _spanning_tree_edges(g: Graph, block: frozenset[int]) -> list[Edge]:
    """Breadth-first spanning tree of the block, rooted at its least vertex."""
    root = min(block)
    seen, order, queue = {root}, [], deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(g.neighbors(u) & block):
            if w not in seen:
                seen.add(w)
                order.append((u, w))
                queue.append(w)
    return order


def realization_trace(g: Graph, deleted: frozenset[int], blocks: list[frozenset[int]]) -> MinorTrace:
    """
    Trace that deletes `deleted` and then contracts each block onto its least vertex.
    """
    steps = [MinorStep("delete", (v,)) for v in sorted(deleted)]
    current = {v: v for v in g.vertices}
    for block in blocks:
        for a, b in _spanning_tree_edges(g, block):
            ca, cb = current[a], current[b]
            steps.append(MinorStep("contract", normalize_edge(ca, cb)))
            keep = min(ca, cb)
            for v, w in current.items():
                if w in (ca, cb):
                    current[v] = keep
    return make_trace(g, steps)


def minor_realizations(g: Graph) -> Iterator[MinorTrace]:
    """
    Every way of obtaining a nonempty minor of `g`: each deleted set D and each
    partition of V minus D into connected blocks, as a trace.

    Unlike `enumerate_minors`, realizations are not deduplicated up to
    isomorphism; the vertex map of each one matters when moves are pulled back.
    """
    verts = g.vertices
    for r in range(len(verts)):
        for deleted in combinations(verts, r):
            pool = frozenset(verts) - set(deleted)
            for blocks in _connected_partitions(g, pool):
                yield realization_trace(g, frozenset(deleted), blocks)


# ==========================================================
# Decompositions, forests, treewidth
# ==========================================================

def find_decompositions(g: Graph) -> list[Decomposition]:
    """
    All reducible decompositions (V1, S, V2) of `g`, up to swapping V1 and V2.

    S ranges over the empty set, single vertices and edges; V1 and V2 collect
    the connected components of G - S and must both be nonempty.
    """
    separators: list[tuple[frozenset[int], str]] = [(frozenset(), "empty")]
    separators += [(frozenset({v}), "vertex") for v in g.vertices]
    separators += [(frozenset(e), "edge") for e in g.sorted_edges]

    out: list[Decomposition] = []
    for s, kind in separators:
        rest = g.induced(set(g.vertices) - s)
        comps = sorted(
            (frozenset(c) for c in nx.connected_components(rest.to_networkx())),
            key=min,
        )
        if len(comps) < 2:
            continue
        first, others = comps[0], comps[1:]
        # component 0 always goes to V1, which quotients out the swap
        for mask in range(2 ** len(others) - 1):
            v1 = set(first)
            v2 = set()
            for i, comp in enumerate(others):
                (v1 if mask >> i & 1 else v2).update(comp)
            out.append(Decomposition(frozenset(v1), s, frozenset(v2), kind))
    return out


def is_reducible(g: Graph) -> bool:
    return bool(find_decompositions(g))


def is_forest(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(g.edges) == g.n - nx.number_connected_components(g.to_networkx())


def is_cycle(g: Graph) -> bool:
    """True iff `g` is a single cycle through all of its vertices."""
    return (
        g.n >= 3
        and len(g.edges) == g.n
        and all(g.degree(v) == 2 for v in g.vertices)
        and nx.is_connected(g.to_networkx())
    )


def is_k2n(g: Graph) -> bool:
    """True iff `g` is a complete bipartite graph K_{2,m} with m >= 1."""
    if g.n < 3:
        return False
    nxg = g.to_networkx()
    if not nx.is_connected(nxg) or not nx.is_bipartite(nxg):
        return False
    left, right = nx.bipartite.sets(nxg)
    small, big = sorted((left, right), key=len)
    return len(small) == 2 and len(g.edges) == 2 * len(big)


def treewidth(g: Graph) -> int:
    """
    Exact treewidth by dynamic programming over elimination prefixes.

    TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|), where Q(S, v)
    holds the vertices outside S + v reachable from v through S.

    Raises:
        CapabilityError: If `g` has more than MAX_TREEWIDTH_VERTICES vertices.
    """
    if g.n > settings.MAX_TREEWIDTH_VERTICES:
        raise CapabilityError(f"treewidth is limited to {settings.MAX_TREEWIDTH_VERTICES} vertices, got {g.n}")
    if g.n == 0:
        return -1
    idx = g.position
    verts = g.vertices
    nbr_mask = [0] * g.n
    for a, b in g.edges:
        nbr_mask[idx[a]] |= 1 << idx[b]
        nbr_mask[idx[b]] |= 1 << idx[a]

    def q_size(s_mask: int, v: int) -> int:
        seen, stack, reach = 1 << v, [v], 0
        while stack:
            u = stack.pop()
            nb = nbr_mask[u] & ~seen
            seen |= nb
            for w in range(g.n):
                if nb >> w & 1:
                    if s_mask >> w & 1:
                        stack.append(w)
                    else:
                        reach |= 1 << w
        return bin(reach).count("1")

    full = (1 << g.n) - 1
    tw = {0: -1}
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            s_mask = sum(1 << i for i in combo)
            tw[s_mask] = min(
                max(tw[s_mask & ~(1 << v)], q_size(s_mask & ~(1 << v), v)) for v in combo
            )
    logger.debug(f"treewidth of {g} over {len(verts)} vertices = {tw[full]}")
    return tw[full]
