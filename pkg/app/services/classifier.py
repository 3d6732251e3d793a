"""
Structural classification of minimal generators.

This module turns the combinatorial descriptions of minimal generators into
explicit moves:

- Degree d, any graph: for every way of realizing a minor H of G and every
  homomorphism phi from H to the fundamental graph X_d, pull the distinguished
  generator f_d back to H along phi and lift it to G (deleted vertices get a
  constant 0 column, contracted vertices copy the column of the vertex they
  merged into). The result contains every degree-d minimal generator up to
  bit flips.
- Degree 2: one move per partition (V1, V2, V3) with no edges between V1 and V2.
- Degree 3: one move per pair of 3-coloring components of a 3-rigid minor.
- Degree 4 on cycles and K_{2,n}: lifts of the K_3 quartic through triangle
  minors.

Candidates are certified against the brute-force fiber components of the
basis engine when requested.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product

from app.core.config import settings
from app.models.classifier import (
    ColoringProvenance,
    FundamentalVertex,
    GeneratorCandidate,
    PartitionProvenance,
    PullbackProvenance,
)
from app.models.graph import Graph, MinorTrace
from app.models.table import Move, Table
from app.services.basis_engine import fiber_component_index
from app.services.colorings import coloring_graph_components
from app.services.fundamental import fundamental_graph, pattern_rows
from app.services.graph_ops import minor_realizations
from app.services.homomorphisms import homomorphisms
from app.services.symmetry import canonicalize_move, expand_orbits
from app.services.witnesses import km_witness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PullbackResult:
    candidates: tuple[GeneratorCandidate, ...]
    truncated: bool = False


# ==========================================================
# Lifting along a minor
# ==========================================================

def lift_rows(g: Graph, trace: MinorTrace, rows: list[int], fill: int = 0) -> list[int]:
    """
    Lift tableau rows on trace.result to rows on g.

    Vertices merged by contraction copy the bit of their image; deleted
    vertices get `fill`.
    """
    h = trace.result
    n, m = g.n, h.n
    image = dict(trace.vertex_map)
    sources = [image[v] for v in g.vertices]
    lifted = []
    for row in rows:
        cell = 0
        for k, w in enumerate(sources):
            if w is None:
                bit = fill
            else:
                bit = (row >> (m - 1 - h.position[w])) & 1
            cell |= bit << (n - 1 - k)
        lifted.append(cell)
    return lifted


def reduced_move(n: int, plus: list[int], minus: list[int]) -> Move | None:
    """Divide out the common factor of the two monomials; None when they coincide."""
    p, q = Table(n, tuple(sorted(plus))), Table(n, tuple(sorted(minus)))
    common = p.gcd(q)
    p, q = p.minus(common), q.minus(common)
    if p.degree == 0:
        return None
    return Move(p, q)


# ==========================================================
# Degree d via fundamental graphs
# ==========================================================

def anchor_vertices(d: int) -> list[int]:
    """
    One vertex of X_d per size k: ({1..k}, {1..k}).

    Permuting the plus rows and the minus rows independently (complementing
    when |S| = d/2 loses 1 from S) maps X_d onto itself and changes a pulled
    back move only by a bit flip, so the first branched vertex of a
    homomorphism search may be pinned to these.
    """
    fg = fundamental_graph(d)
    return [
        fg.index(FundamentalVertex(tuple(range(1, k + 1)), tuple(range(1, k + 1))))
        for k in range(1, d // 2 + 1)
    ]


def pullback_candidates(
    g: Graph,
    d: int,
    budget: int | None = None,
    certify: bool = True,
) -> PullbackResult:
    """
    Pull the distinguished generator f_d back to g through every minor
    realization and homomorphism into X_d.

    Args:
        g (Graph): Model graph.
        d (int): Degree.
        budget (int | None): Max homomorphisms per minor realization.
        certify (bool): Certify minimality against the degree-d fibers of g.

    Returns:
        PullbackResult: Distinct (up to sign) reduced moves with provenance.
    """
    fg = fundamental_graph(d)
    anchors = anchor_vertices(d)
    homs_by_minor: dict[Graph, object] = {}
    seen: set = set()
    out: list[GeneratorCandidate] = []
    truncated = False

    for trace in minor_realizations(g):
        h = trace.result
        if h not in homs_by_minor:
            homs_by_minor[h] = homomorphisms(h, fg.graph, budget=budget, first_choices=anchors)
        search = homs_by_minor[h]
        truncated = truncated or search.truncated
        for phi in search.maps:
            plus, minus = pattern_rows(d, [fg.labels[i] for i in phi])
            move = reduced_move(g.n, lift_rows(g, trace, plus), lift_rows(g, trace, minus))
            if move is None or move.sign_key() in seen:
                continue
            seen.add(move.sign_key())
            out.append(GeneratorCandidate(g, move, PullbackProvenance("pullback", trace, phi)))

    logger.info(f"{g}: {len(out)} distinct pullback candidates at degree {d}")
    if certify:
        out = certify_candidates(g, d, out)
    return PullbackResult(tuple(out), truncated)


def certify_candidates(g: Graph, d: int, candidates: list[GeneratorCandidate]) -> list[GeneratorCandidate]:
    """Mark each candidate minimal iff both monomials have degree d and lie in different fiber components."""
    index = fiber_component_index(g, d)
    out = []
    for c in candidates:
        a, b = index.get(c.move.plus), index.get(c.move.minus)
        minimal = (
            c.move.degree == d and a is not None and b is not None and a[0] == b[0] and a[1] != b[1]
        )
        out.append(GeneratorCandidate(c.graph, c.move, c.provenance, minimal))
    return out


def canonical_generators(g: Graph, candidates) -> set[Move]:
    """Canonical forms of the certified candidates."""
    return {canonicalize_move(g, c.move) for c in candidates if c.minimal}


# ==========================================================
# Degree 2
# ==========================================================

def degree2_classes(g: Graph) -> list[tuple[tuple[frozenset[int], frozenset[int], frozenset[int]], Move]]:
    """
    One quadric per unordered partition (V1, V2, V3) with V1, V2 nonempty and no
    edge between V1 and V2. Rows over the blocks (V1, V2, V3):

        [1 0 1] - [1 1 1]
        [0 1 1]   [0 0 1]
    """
    out = []
    verts = g.vertices
    for labels in product((0, 1, 2), repeat=g.n):
        v1 = frozenset(v for v, x in zip(verts, labels) if x == 0)
        v2 = frozenset(v for v, x in zip(verts, labels) if x == 1)
        v3 = frozenset(v for v, x in zip(verts, labels) if x == 2)
        if not v1 or not v2 or min(v1 | v2) not in v1:
            continue
        if any((a in v1 and b in v2) or (a in v2 and b in v1) for a, b in g.edges):
            continue

        def row(ones: frozenset[int]) -> int:
            cell = 0
            for k, v in enumerate(verts):
                if v in ones:
                    cell |= 1 << (g.n - 1 - k)
            return cell

        plus = Table(g.n, tuple(sorted((row(v1 | v3), row(v2 | v3)))))
        minus = Table(g.n, tuple(sorted((row(v1 | v2 | v3), row(v3)))))
        out.append(((v1, v2, v3), Move(plus, minus)))
    return out


def degree2_candidates(g: Graph) -> list[GeneratorCandidate]:
    return [
        GeneratorCandidate(g, m, PartitionProvenance("partition", v1, v2, v3), True)
        for (v1, v2, v3), m in degree2_classes(g)
    ]


def degree2_moves(g: Graph) -> list[Move]:
    """All quadratic minimal generators: the bit-flip orbits of the partition classes."""
    return expand_orbits(g, [m for _, m in degree2_classes(g)], with_automorphisms=False)


# ==========================================================
# Degree 3
# ==========================================================

def degree3_generators(g: Graph, certify: bool = False) -> list[GeneratorCandidate]:
    """
    Cubic generators from 3-rigid minors.

    For each minor realization H with at least two coloring components, and
    each component representative R_i (i > 1), row j of the plus tableau has a
    1 at vertex k when k is deleted or its image is colored j in R_1; the minus
    tableau uses R_i.
    """
    out: list[GeneratorCandidate] = []
    seen: set = set()
    for trace in minor_realizations(g):
        h = trace.result
        if h.n > settings.MAX_COLORING_VERTICES:
            continue
        comps = coloring_graph_components(h)
        if len(comps) < 2:
            continue
        base = comps[0].representative

        def rows(coloring: tuple[int, ...]) -> list[int]:
            out_rows = []
            for color in range(3):
                bits = 0
                for k, c in enumerate(coloring):
                    if c == color:
                        bits |= 1 << (h.n - 1 - k)
                out_rows.append(bits)
            return lift_rows(g, trace, out_rows, fill=1)

        for comp in comps[1:]:
            move = reduced_move(g.n, rows(base), rows(comp.representative))
            if move is None or move.sign_key() in seen:
                continue
            seen.add(move.sign_key())
            out.append(GeneratorCandidate(
                g, move, ColoringProvenance("coloring", trace, base, comp.representative)
            ))
    logger.info(f"{g}: {len(out)} cubic generators from 3-rigid minors")
    if certify and out:
        out = certify_candidates(g, 3, out)
    return out


# ==========================================================
# Quartics from triangle minors
# ==========================================================

def triangle_quartics(g: Graph) -> list[Move]:
    """
    Lifts of the K_3 quartic through every realization of K_3 as a minor of g,
    expanded over bit flips.

    On a cycle these are exactly its quartic minimal generators; on K_{2,n}
    they are the quartic shuffles used by its reduction procedure.
    """
    quartic = km_witness(3)
    lifts = []
    for trace in minor_realizations(g):
        h = trace.result
        if h.n != 3 or len(h.edges) != 3:
            continue
        move = reduced_move(
            g.n,
            lift_rows(g, trace, list(quartic.plus.cells)),
            lift_rows(g, trace, list(quartic.minus.cells)),
        )
        if move is not None:
            lifts.append(move)
    out = expand_orbits(g, lifts, with_automorphisms=False)
    logger.debug(f"{g}: {len(out)} quartics lifted from {len(lifts)} triangle minors")
    return out
