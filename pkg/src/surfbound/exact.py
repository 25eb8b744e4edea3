"""Exact scalars: rationals, generalized binomials and arithmetic-range sums.

``Rational`` is the stdlib :class:`fractions.Fraction`; it is always kept in
lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Union

Rational = Fraction
Number = Union[int, Fraction]


def as_rational(x: Number) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact computations")
    return Fraction(x)


def binom_general(x: Number, k: int) -> Fraction:
    """Binomial coefficient as the falling-factorial polynomial x(x-1)...(x-k+1)/k!.

    Defined for every rational ``x`` (negative and non-integer included), so
    ``binom_general(-1, 3) == -1`` and ``binom_general(2, 3) == 0``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = as_rational(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    return num / factorial(k)


def range_sum(a: int, b: int) -> int:
    """Sum of the integers a, a+1, ..., b; zero for an empty range."""
    if b < a:
        return 0
    return (a + b) * (b - a + 1) // 2


def poly_range_sum(a: Number, b: Number) -> Fraction:
    """Closed form b(b+1)/2 - a(a-1)/2 of ``range_sum`` extended to rational endpoints."""
    a, b = as_rational(a), as_rational(b)
    return (b * (b + 1) - a * (a - 1)) / 2


def ceil_q(x: Number) -> int:
    x = as_rational(x)
    return -((-x.numerator) // x.denominator)


def floor_q(x: Number) -> int:
    x = as_rational(x)
    return x.numerator // x.denominator


def fmt_q(x: Number) -> str:
    """Exact string form: ``"7"`` or ``"-29/2"``."""
    return str(as_rational(x))
