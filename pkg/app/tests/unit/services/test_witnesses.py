import pytest

from app.core.errors import ArgumentError, CapabilityError
from app.services import catalog
from app.services.marginals import is_move
from app.services.witnesses import km_witness, kmn_witness, witness_index_strings


def test_triangle_witness_rows():
    m = km_witness(3)
    assert m.plus.rows() == ["000", "011", "101", "110"]
    assert m.minus.rows() == ["001", "010", "100", "111"]


@pytest.mark.parametrize("m", [3, 4, 5])
def test_km_witness_is_a_move_of_degree_2m_minus_2(m):
    move = km_witness(m)
    assert move.degree == 2 * m - 2
    assert is_move(catalog.complete(m), move)


def test_km_witness_needs_three_vertices():
    with pytest.raises(ArgumentError):
        km_witness(2)


def test_kmn_witness_smallest_case():
    """ Should live on K_(2,1) with the even strings on the plus side."""
    g, move = kmn_witness(2)
    assert g == catalog.complete_bipartite(2, 1)
    assert witness_index_strings(2) == ["11"]
    assert move.plus.rows() == ["001", "111"]
    assert move.minus.rows() == ["011", "101"]


@pytest.mark.parametrize("m, strings, degree", [(3, 6, 4), (4, 24, 8)])
def test_kmn_witness_sizes(m, strings, degree):
    g, move = kmn_witness(m)
    assert len(witness_index_strings(m)) == strings
    assert g.n == m + strings
    assert move.degree == degree
    assert is_move(g, move)


def test_kmn_witness_limits():
    with pytest.raises(ArgumentError):
        kmn_witness(1)
    with pytest.raises(CapabilityError):
        kmn_witness(5)
