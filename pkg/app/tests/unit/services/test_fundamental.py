import pytest

from app.core.errors import ArgumentError, CapabilityError
from app.models.classifier import FundamentalVertex
from app.services.fundamental import distinguished_generator, fundamental_graph, fundamental_vertices
from app.services.marginals import marginals_of


@pytest.mark.parametrize("d, size", [(2, 2), (3, 9), (4, 34)])
def test_fundamental_graph_sizes(d, size):
    assert fundamental_graph(d).graph.n == size
    assert len(fundamental_vertices(d)) == size


def test_x2_has_no_edges():
    """ Should leave (1,1) and (1,2) unconnected."""
    fg = fundamental_graph(2)
    assert fg.graph.edges == frozenset()
    assert [v.label() for v in fg.labels] == ["(1,1)", "(1,2)"]


def test_adjacency_rule():
    fg = fundamental_graph(3)
    a = fg.index(FundamentalVertex((1,), (1,)))
    b = fg.index(FundamentalVertex((2,), (2,)))
    c = fg.index(FundamentalVertex((1,), (2,)))
    assert fg.graph.has_edge(a, b)
    assert not fg.graph.has_edge(a, c)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_distinguished_generator_balances_marginals(d):
    """ Should give a degree-d binomial with equal marginals on X_d."""
    g = fundamental_graph(d).graph
    f = distinguished_generator(d)
    assert f.degree == d
    assert marginals_of(g, f.plus) == marginals_of(g, f.minus)


def test_degree_limits():
    with pytest.raises(ArgumentError):
        fundamental_graph(1)
    with pytest.raises(CapabilityError):
        fundamental_graph(7)


@pytest.mark.parametrize("vertex", [
    FundamentalVertex((1,), (1, 2)),
    FundamentalVertex((2, 3), (1, 2)),
    FundamentalVertex((1, 2, 3), (1, 2, 3)),
    FundamentalVertex((5,), (1,)),
])
def test_invalid_vertices(vertex):
    with pytest.raises(ArgumentError):
        vertex.validate(4)
