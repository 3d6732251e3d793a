import pytest

from app.core.errors import ArgumentError
from app.models.table import Move, Table
from app.services.marginals import is_move
from app.services.symmetry import canonicalize_move, expand_orbit, group_elements


@pytest.fixture
def quadric():
    return Move(Table.from_bits(["1101", "0111"]), Table.from_bits(["1111", "0101"]))


def test_group_size(c4):
    assert len(group_elements(c4)) == 16 * 8
    assert len(group_elements(c4, with_automorphisms=False)) == 16


def test_group_elements_map_moves_to_moves(c4, quadric):
    """ Should preserve the move property for every flip and automorphism."""
    for element in group_elements(c4):
        assert is_move(c4, element.move(quadric))


def test_canonical_form_is_orbit_invariant(c4, quadric):
    base = canonicalize_move(c4, quadric)
    for element in group_elements(c4)[::7]:
        assert canonicalize_move(c4, element.move(quadric)) == base
    assert canonicalize_move(c4, quadric.negated()) == base


def test_bit_flip_orbit_of_a_quadric(c4, quadric):
    """ Should give four moves up to sign: flips of the separating vertices only change the sign."""
    assert len(expand_orbit(c4, quadric, with_automorphisms=False)) == 4
    assert len(expand_orbit(c4, quadric)) == 8


def test_canonicalize_rejects_non_moves(c4):
    with pytest.raises(ArgumentError):
        canonicalize_move(c4, Move(Table.from_bits(["1000"]), Table.from_bits(["0100"])))
