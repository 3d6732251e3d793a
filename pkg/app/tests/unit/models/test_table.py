import numpy as np
import pytest

from app.core.errors import ArgumentError
from app.models.table import MarginalVector, Move, Table, bit_at, cell_bits, parse_cell


def test_cell_encoding_reads_most_significant_bit_first():
    """ Should map index strings to cells as binary numbers."""
    assert cell_bits(5, 4) == "0101"
    assert parse_cell("0101") == 5
    assert bit_at(5, 4, 1) == 1
    assert bit_at(5, 4, 0) == 0


def test_parse_cell_rejects_non_binary():
    with pytest.raises(ArgumentError):
        parse_cell("012")


def test_table_sorts_cells_and_checks_range():
    """ Should keep cells sorted and refuse cells outside 0..2^n-1."""
    assert Table(2, (3, 0, 1)).cells == (0, 1, 3)
    with pytest.raises(ArgumentError):
        Table(2, (4,))


def test_table_from_counts():
    t = Table.from_counts(2, {0: 2, 3: 1})
    assert t.cells == (0, 0, 3)
    assert t.degree == 3
    assert t.entries == {0: 2, 3: 1}
    assert t.count(1) == 0
    assert t.rows() == ["00", "00", "11"]
    np.testing.assert_array_equal(t.to_vector(), [2, 0, 0, 1])


def test_table_from_counts_rejects_negative_entries():
    with pytest.raises(ArgumentError):
        Table.from_counts(2, {0: -1})


def test_table_arithmetic():
    """ Should add, divide and take gcds entrywise."""
    a = Table.from_bits(["00", "00", "11"])
    b = Table.from_bits(["00", "01"])
    assert (a + b).cells == (0, 0, 0, 1, 3)
    assert a.contains(Table.from_bits(["00", "00"]))
    assert not a.contains(b)
    assert a.minus(b) is None
    assert a.minus(Table.from_bits(["11"])).cells == (0, 0)
    assert a.gcd(b).cells == (0,)


def test_table_size_mismatch():
    with pytest.raises(ArgumentError):
        Table(2, (0,)) + Table(3, (0,))


def test_move_apply_in_both_directions():
    """ Should trade minus for plus with sign +1 and reject negative results."""
    m = Move(Table.from_bits(["00", "11"]), Table.from_bits(["01", "10"]))
    t = Table.from_bits(["01", "10"])
    assert m.apply(t, 1) == Table.from_bits(["00", "11"])
    assert m.apply(t, -1) is None
    assert m.degree == 2
    assert m.negated().plus == m.minus


def test_move_up_to_sign_is_shared_by_negation():
    m = Move(Table.from_bits(["01", "10"]), Table.from_bits(["00", "11"]))
    assert m.up_to_sign() == m.negated().up_to_sign()
    assert m.sign_key() == m.negated().sign_key()


def test_move_sides_must_share_dimension():
    with pytest.raises(ArgumentError):
        Move(Table(2), Table(3))


def test_marginal_vector_blocks():
    """ Should split counts into edge blocks and isolated-vertex blocks."""
    mv = MarginalVector(((0, 1),), (2,), (1, 0, 0, 1, 2, 0))
    assert mv.edge_counts == {(0, 1): ((1, 0), (0, 1))}
    assert mv.vertex_counts == {2: (2, 0)}
    assert mv.total == 2
    assert (mv + mv).counts == (2, 0, 0, 2, 4, 0)


def test_marginal_vector_length_is_checked():
    with pytest.raises(ArgumentError):
        MarginalVector(((0, 1),), (), (1, 0, 0))
