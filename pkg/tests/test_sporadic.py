from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from surfbound.certifier import interpolate
from surfbound.errors import InputError
from surfbound.sporadic import (
    SporadicProfile,
    case_bound_A,
    extremal_profile,
    first_estimate_A,
    profile_stats,
    select_case,
)


def column_sum(lo, hi):
    return sum(range(lo, hi + 1))


@pytest.mark.parametrize(
    "args, case, expected",
    [
        ((10, 8, 40, 3), "i", 10 + 11 + 12),
        ((10, 8, 26, 6), "ii", (10 + 11 + 12 + 13) + (9 + 10)),
        ((10, 9, 24, 8), "iii", column_sum(10, 14) + column_sum(10, 13)),
    ],
)
def test_case_bound_examples(args, case, expected):
    assert case_bound_A(*args) == (case, expected)


def test_case_bound_zero_and_errors():
    assert case_bound_A(10, 8, 40, 0)[1] == 0
    with pytest.raises(InputError):
        case_bound_A(8, 8, 40, 3)


def test_extremal_examples():
    p = extremal_profile(10, 9, 24, 8, True)
    assert sorted(t for t, a in p.counts for _ in range(a)) == [10, 11, 11, 12, 12, 13, 13, 14]
    assert (p.A, p.Z, p.mode) == (96, 8, "constrained-case-iii")
    p = extremal_profile(10, 8, 40, 3, True)
    assert (p.as_dict(), p.A) == ({10: 1, 11: 1, 12: 1}, 33)
    for constrained in (True, False):
        assert profile_stats(extremal_profile(10, 8, 40, 0, constrained)) == (0, 0, 0)


def test_profile_stats_examples():
    degrees = list(range(18, 53)) + list(range(18, 52))  # column 1 from 17 minus the dropped 17
    p = SporadicProfile.from_degrees(degrees)
    assert profile_stats(p) == (1225 + 1190 - 17, 69, 27258)
    assert profile_stats(SporadicProfile(())) == (0, 0, 0)
    assert profile_stats(SporadicProfile(((10, 2),))) == (20, 2, 196)


def test_profile_rejects_degree_zero():
    with pytest.raises(InputError):
        SporadicProfile.from_degrees([0, 3])


@pytest.mark.parametrize(
    "d, s, expected",
    [(64, 4, Fraction(10513, 4)), (70, 5, Fraction(9801, 4)), (0, 4, Fraction(1, 4))],
)
def test_first_estimate(d, s, expected):
    assert first_estimate_A(d, s) == expected


@pytest.mark.parametrize(
    "s, coeffs",
    [(4, (Fraction(153, 256), Fraction(45, 16), Fraction(1, 4))), (5, (Fraction(9, 20), Fraction(7, 2), Fraction(1, 4)))],
)
def test_first_estimate_interpolates_printed_quadratic(s, coeffs):
    xs = (16, 32, 64)
    assert interpolate(xs, [first_estimate_A(d, s) for d in xs]) == coeffs


grid = st.tuples(
    st.integers(2, 30),  # lambda_1
    st.integers(1, 2),  # gap
    st.integers(10, 120),  # d
    st.integers(0, 150),  # z
)


@given(grid)
def test_greedy_never_exceeds_case_formula(data):
    l1, gap, d, z = data
    l0 = l1 + gap
    p = extremal_profile(l0, l1, d, z, True)
    case, bound = case_bound_A(l0, l1, d, z)
    assert p.Z == z
    assert p.A <= bound
    assert p.W == 12 * p.A - 22 * p.Z
    assert all(t >= l1 + 1 >= 2 and 12 * t - 22 > 0 for t, _ in p.counts)
    if case in ("i", "ii"):
        assert p.top_degree <= max(l0 + z - 1, d - d // 2) or z == 0


def test_equality_when_capacity_is_exact():
    hits = 0
    for l1 in range(2, 20):
        for l0 in (l1 + 1, l1 + 2):
            for d in range(10, 80, 3):
                for z in range(1, 80, 2):
                    case, bound = case_bound_A(l0, l1, d, z)
                    if case == "iii" and (l0 + l1 + z) % 2:
                        continue  # capacity z + 1: greedy drops the lowest slot
                    hits += 1
                    assert extremal_profile(l0, l1, d, z, True).A == bound
    assert hits > 1000


def test_unconstrained_single_column():
    p = extremal_profile(17, 15, 40, 20, False)
    assert p.mode == "unconstrained" and p.A == column_sum(17, 36)


def test_select_case_is_exact_rational():
    # lambda_0 + z - 1 = 20 against d/2 = 20.5 (no pre-rounding)
    assert select_case(11, 10, 41, 10) == "i"
    assert select_case(11, 10, 40, 10) == "i"
    assert select_case(11, 10, 39, 10) == "ii"
