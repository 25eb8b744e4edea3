from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from surfbound.exact import binom_general, ceil_q, floor_q, poly_range_sum, range_sum

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@pytest.mark.parametrize(
    "x, k, expected",
    [
        (17, 3, 680),  # 17*16*15/6
        (-1, 3, -1),
        (Fraction(76, 5), 3, Fraction(76 * 71 * 66, 125 * 6)),
    ],
)
def test_binom_examples(x, k, expected):
    assert binom_general(x, k) == expected


def test_binom_76_5_reduced():
    assert binom_general(Fraction(76, 5), 3) == Fraction(59356, 125)


def test_binom_matches_comb_exhaustively():
    for n in range(61):
        for k in range(n + 1):
            assert binom_general(n, k) == comb(n, k)


@pytest.mark.parametrize("t", [1, 2, 3])
def test_binom_vanishes_below_k(t):
    assert binom_general(t - 1, 3) == 0


@given(st.integers(min_value=0, max_value=12))
def test_binom_k_minus_one(k):
    assert binom_general(k - 1, k) == (1 if k == 0 else 0)


@given(fractions)
def test_binom_zero(x):
    assert binom_general(x, 0) == 1


def test_binom_rejects_negative_k():
    with pytest.raises(ValueError):
        binom_general(3, -1)


def test_floats_rejected():
    with pytest.raises(TypeError):
        binom_general(2.5, 2)


@pytest.mark.parametrize("a, b, expected", [(18, 52, 1225), (5, 4, 0), (17, 51, 1190)])
def test_range_sum_examples(a, b, expected):
    assert range_sum(a, b) == expected


def test_range_sum_closed_form_grid():
    for a in range(-20, 40, 3):
        for b in range(a, 80, 7):
            assert range_sum(a, b) == b * (b + 1) // 2 - a * (a - 1) // 2 == sum(range(a, b + 1))


@given(st.integers(-100, 100), st.integers(-100, 100))
def test_poly_range_sum_agrees_on_nonempty_ranges(a, b):
    if b >= a - 1:
        assert poly_range_sum(a, b) == range_sum(a, b)


@given(fractions, fractions, fractions)
def test_rational_arithmetic_canonical(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    w = (x - y) * z
    assert w.denominator > 0
    from math import gcd

    assert gcd(abs(w.numerator), w.denominator) == 1


@given(fractions)
def test_ceil_floor(x):
    assert floor_q(x) <= x <= ceil_q(x)
    assert ceil_q(x) - floor_q(x) == (0 if x.denominator == 1 else 1)
