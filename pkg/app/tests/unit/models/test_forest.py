from fractions import Fraction

import pytest

from app.core.errors import ArgumentError
from app.models.forest import RationalSeries


def test_rational_series_is_one_based():
    s = RationalSeries((Fraction(1), Fraction(1, 6)))
    assert len(s) == 2
    assert s.coefficient(2) == Fraction(1, 6)


def test_rational_series_requires_fractions():
    with pytest.raises(ArgumentError):
        RationalSeries((1.0,))
