"""
This module defines the graph value types every other part of the toolkit is
built on: the labeled simple `Graph`, the `MinorTrace` recording how a minor
was obtained, and the `Decomposition` witnessing that a graph is reducible.

All three are immutable and freely shareable between threads.

Used By:
    - Graph operations (minors, canonical forms, decompositions).
    - The marginal map, whose index strings follow `Graph.vertices` order.
    - The structural classifier, which pulls moves back along minor traces.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Literal

import networkx as nx

from app.core.errors import ArgumentError

Edge = tuple[int, int]


def normalize_edge(u: int, v: int) -> Edge:
    """Return the edge {u, v} as an ordered pair (smaller endpoint first)."""
    if u == v:
        raise ArgumentError(f"loop at vertex {u} is not allowed in a simple graph")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Labeled simple graph with stable integer vertex ids.

    Attributes:
        vertices (tuple[int, ...]): Sorted vertex labels. Position k in this tuple
            is column k of every index string built on the graph.
        edges (frozenset[Edge]): Unordered edges stored as (u, v) with u < v.
    """
    vertices: tuple[int, ...]
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ArgumentError("vertex labels must be distinct and sorted")
        live = set(self.vertices)
        for u, v in self.edges:
            if u >= v:
                raise ArgumentError(f"edge {(u, v)} must be stored with u < v")
            if u not in live or v not in live:
                raise ArgumentError(f"edge {(u, v)} has an endpoint that is not a vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
        """Build a graph on vertices 0..n-1 from an iterable of vertex pairs."""
        return cls(tuple(range(n)), frozenset(normalize_edge(u, v) for u, v in edges))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def position(self) -> dict[int, int]:
        """Map from vertex label to its column in index strings."""
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    @cached_property
    def isolated(self) -> tuple[int, ...]:
        """Vertices incident to no edge, in label order."""
        return tuple(v for v in self.vertices if not self.adjacency[v])

    def has_vertex(self, v: int) -> bool:
        return v in self.position

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and normalize_edge(u, v) in self.edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on `keep`, labels unchanged."""
        keep = set(keep)
        missing = keep - set(self.vertices)
        if missing:
            raise ArgumentError(f"unknown vertices {sorted(missing)}")
        return Graph(
            tuple(sorted(keep)),
            frozenset(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def relabeled(self) -> tuple[Graph, dict[int, int]]:
        """Return an isomorphic copy on 0..n-1 and the label map used."""
        mapping = {v: k for k, v in enumerate(self.vertices)}
        return (
            Graph.from_edges(self.n, ((mapping[u], mapping[v]) for u, v in self.edges)),
            mapping,
        )

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.sorted_edges)})"


@dataclass(frozen=True)
class MinorStep:
    """
    One step of a minor sequence.

    Attributes:
        kind (str): `delete` (vertex deletion), `contract` (edge contraction) or
            `delete_edge` (experimental, never used by the generator pipeline).
        vertices (tuple[int, ...]): The deleted vertex, or the edge endpoints.
    """
    kind: Literal["delete", "contract", "delete_edge"]
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class MinorTrace:
    """
    Witness that `result` is a minor of `base`.

    Attributes:
        base (Graph): The graph the steps start from.
        steps (tuple[MinorStep, ...]): Deletions and contractions, in order.
        result (Graph): The graph obtained by replaying the steps.
        vertex_map (tuple[tuple[int, int | None], ...]): For each base vertex, its
            image in `result`, or None when it was deleted.
    """
    base: Graph
    steps: tuple[MinorStep, ...]
    result: Graph
    vertex_map: tuple[tuple[int, int | None], ...]

    def image(self, v: int) -> int | None:
        return dict(self.vertex_map)[v]

    @property
    def deleted(self) -> tuple[int, ...]:
        return tuple(v for v, w in self.vertex_map if w is None)


@dataclass(frozen=True)
class Decomposition:
    """
    Reducible decomposition (V1, S, V2) of a graph.

    Attributes:
        v1, v2 (frozenset[int]): The two separated vertex sets.
        s (frozenset[int]): Empty, a single shared vertex, or the endpoints of a shared edge.
        kind (str): `empty`, `vertex` or `edge`, matching the size of `s`.
    """
    v1: frozenset[int]
    s: frozenset[int]
    v2: frozenset[int]
    kind: Literal["empty", "vertex", "edge"]

    def pieces(self, g: Graph) -> tuple[Graph, Graph]:
        """The induced subgraphs G1 = G[V1 ∪ S] and G2 = G[V2 ∪ S]."""
        return g.induced(self.v1 | self.s), g.induced(self.v2 | self.s)
