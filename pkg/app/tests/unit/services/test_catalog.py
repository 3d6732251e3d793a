import pytest

from app.core.errors import ArgumentError
from app.services import catalog


def test_named_graphs_resolve():
    """ Should return fixed names and the parametric families."""
    assert catalog.named("C5") == catalog.cycle(5)
    assert catalog.named("K2,3") == catalog.complete_bipartite(2, 3)
    assert catalog.named("K23") == catalog.complete_bipartite(2, 3)
    assert catalog.named("S3") == catalog.star(3)
    assert catalog.named("P4").edges == frozenset({(0, 1), (1, 2), (2, 3)})


@pytest.mark.parametrize("name", ["X9", "Cx", "nope"])
def test_unknown_names(name):
    with pytest.raises(ArgumentError):
        catalog.named(name)


def test_cycle_needs_three_vertices():
    with pytest.raises(ArgumentError):
        catalog.cycle(2)


def test_disjoint_union_shifts_labels(k3):
    g = catalog.disjoint_union(k3, catalog.path(2))
    assert g.n == 5
    assert (3, 4) in g.edges
    assert len(g.edges) == 4


def test_glue_along_vertex_and_edge(k3):
    """ Should identify the given vertex or edge of both graphs."""
    p = catalog.glue(catalog.path(2), catalog.path(2), (1,), (0,))
    assert p.edges == frozenset({(0, 1), (1, 2)})
    k4_minus_edge = catalog.glue(k3, k3, (0, 1), (0, 1))
    assert k4_minus_edge.n == 4
    assert len(k4_minus_edge.edges) == 5


def test_glue_rejects_non_edges():
    with pytest.raises(ArgumentError):
        catalog.glue(catalog.path(3), catalog.path(3), (0, 2), (0, 1))


def test_table_graphs_have_expected_sizes():
    sizes = {name: (g.n, len(g.edges)) for name, g in catalog.NAMED_GRAPHS.items()}
    assert sizes["K4~"] == (5, 7)
    assert sizes["SP"] == (5, 8)
    assert sizes["BP"] == (5, 9)
    assert sizes["G151"] == (6, 8)
    assert sizes["prism"] == (6, 9)
