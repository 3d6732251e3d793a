"""
Value types of the forest-degree computations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from app.core.errors import ArgumentError


@dataclass(frozen=True)
class RationalSeries:
    """
    Odd power series c_1 x + c_2 x^3 + ... + c_N x^(2N - 1) with exact
    rational coefficients.

    Attributes:
        coefficients (tuple[Fraction, ...]): c_1..c_N.
    """
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if any(not isinstance(c, Fraction) for c in self.coefficients):
            raise ArgumentError("series coefficients must be Fractions")

    def __len__(self) -> int:
        return len(self.coefficients)

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x^(2k - 1), k >= 1."""
        return self.coefficients[k - 1]
