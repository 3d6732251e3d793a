import pytest

from app.core.errors import ArgumentError
from app.models.graph import Graph, normalize_edge


def test_from_edges_normalizes_pairs():
    """ Should store every edge with its smaller endpoint first."""
    g = Graph.from_edges(3, [(1, 0), (2, 1)])
    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.sorted_edges == ((0, 1), (1, 2))
    assert g.n == 3


def test_loops_are_rejected():
    with pytest.raises(ArgumentError):
        normalize_edge(2, 2)


@pytest.mark.parametrize("vertices, edges", [
    ((1, 0), frozenset()),
    ((0, 1), frozenset({(0, 2)})),
    ((0, 1), frozenset({(1, 0)})),
])
def test_invalid_graphs_are_rejected(vertices, edges):
    with pytest.raises(ArgumentError):
        Graph(vertices, edges)


def test_adjacency_and_isolated_vertices(example):
    assert example.isolated == (3,)
    assert example.neighbors(1) == frozenset({0, 2})
    assert example.degree(3) == 0
    assert example.has_edge(1, 0)
    assert not example.has_edge(0, 2)


def test_induced_keeps_labels(c4):
    h = c4.induced([1, 2, 3])
    assert h.vertices == (1, 2, 3)
    assert h.edges == frozenset({(1, 2), (2, 3)})
    with pytest.raises(ArgumentError):
        c4.induced([7])


def test_relabeled_returns_consecutive_labels():
    g = Graph((2, 5, 9), frozenset({(2, 9)}))
    h, mapping = g.relabeled()
    assert h.vertices == (0, 1, 2)
    assert h.edges == frozenset({(0, 2)})
    assert mapping == {2: 0, 5: 1, 9: 2}


def test_decomposition_pieces():
    """ Should return the two induced pieces sharing the separator."""
    from app.models.graph import Decomposition
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    dec = Decomposition(frozenset({0}), frozenset({1}), frozenset({2}), "vertex")
    g1, g2 = dec.pieces(g)
    assert g1.edges == frozenset({(0, 1)})
    assert g2.edges == frozenset({(1, 2)})
