import pytest

from app.core.errors import ArgumentError, CapabilityError
from app.models.table import Move, Table
from app.services import catalog
from app.services.marginals import (
    claimed_facet_is_facet,
    is_move,
    marginal_matrix,
    marginals_of,
    polytope_dimension,
    row_labels,
)


@pytest.fixture
def quadric():
    """A degree-2 move of C4: vertices 0 and 2 are independent given 1 and 3."""
    return Move(Table.from_bits(["1000", "0010"]), Table.from_bits(["1010", "0000"]))


def test_marginal_matrix_shape_and_column_sums(example):
    """ Should have one row per edge cell and isolated-vertex level, one 1 per block in each column."""
    a = marginal_matrix(example)
    assert a.shape == (10, 16)
    assert set(a.sum(axis=0)) == {3}
    assert row_labels(example)[0] == "e(0,1)=00"
    assert row_labels(example)[-1] == "v(3)=1"


@pytest.mark.parametrize("g", [catalog.example_graph(), catalog.complete(3), catalog.cycle(4), catalog.path(2)])
def test_polytope_dimension_is_vertices_plus_edges(g):
    assert polytope_dimension(g) == g.n + len(g.edges)


def test_marginals_of_zero_table(c4):
    assert marginals_of(c4, Table.zero(4)).counts == (0,) * 16


def test_marginals_are_additive(c4):
    a = Table.from_bits(["1000", "0110"])
    b = Table.from_bits(["1111"])
    assert marginals_of(c4, a + b) == marginals_of(c4, a) + marginals_of(c4, b)


def test_marginals_reject_wrong_dimension(c4):
    with pytest.raises(ArgumentError):
        marginals_of(c4, Table.zero(3))


def test_is_move(c4, quadric):
    """ Should accept the quadric and reject malformed pairs."""
    assert is_move(c4, quadric)
    assert is_move(c4, quadric.negated())
    assert not is_move(c4, Move(Table.from_bits(["1000"]), Table.from_bits(["0100"])))
    assert not is_move(c4, Move(Table.from_bits(["1000", "0000"]), Table.from_bits(["1000", "0000"])))
    assert not is_move(c4, Move(Table.zero(4), Table.zero(4)))
    assert not is_move(catalog.complete(3), quadric)


def test_facets_of_a_single_edge():
    """ Every coordinate inequality of the 2x2 simplex is a facet."""
    g = catalog.path(2)
    assert all(claimed_facet_is_facet(g, row) for row in range(4))


def test_facet_check_preconditions(c4):
    with pytest.raises(CapabilityError):
        claimed_facet_is_facet(c4, 0)
    with pytest.raises(ArgumentError):
        claimed_facet_is_facet(catalog.path(2), 4)


def test_marginal_matrix_is_capped():
    with pytest.raises(CapabilityError):
        marginal_matrix(catalog.path(13))
