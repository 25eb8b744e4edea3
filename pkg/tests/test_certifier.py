from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from surfbound import certifier
from surfbound.bounds import eval_poly
from surfbound.certifier import Policy, eq4_check, eq7_check, eq7_cubic_coeffs, scan_degrees
from surfbound.configs import enumerate_configs
from surfbound.errors import InputError
from surfbound.sporadic import extremal_profile

WEAK = Policy(strict_genus=False)


def test_worked_verdict_71_5():
    v = eq4_check(71, 5, [18, 16, 14, 12, 11])
    # hand oracle: genus_sum 538, chi_sum 2423, pi >= 470 so z = 1 + 538 - 470
    base = 71 * 71 - 5 * 71 - 10 * 538 + 12 * 2423
    a = sum(range(18, 53)) + sum(range(17, 52)) - 17  # case (iii), r = 52, one slot too many
    w = 12 * a - 22 * 69
    assert (base, a, w) == (28382, 2398, 27258)
    assert (v.base, v.z_cap, v.w_max, v.margin, v.feasible, v.case) == (base, 69, w, base - w - 18, False, "iii")
    assert v.margin == 1106
    assert v.a_case == a + 17
    assert v.headline() == "INFEASIBLE margin=1106 z=69 case=iii"


def test_small_unconstrained_verdict():
    # genus_sum 50, chi_sum 36 + 20 + 10 + 4 = 70 -> base = 400 - 100 - 500 + 840
    v = eq4_check(20, 4, [8, 6, 4, 2], WEAK)
    assert (v.base, v.z_cap, v.constrained, v.w_max, v.feasible) == (640, 20, False, 12 * sum(range(8, 28)) - 440, True)
    assert v.w_max == 3760
    # K^2 < 6 chi read strictly: pi > 31, one zero fewer
    assert eq4_check(20, 4, [8, 6, 4, 2]).z_cap == 19


def test_negative_cap_is_infeasible():
    for lam in enumerate_configs(90, 7):
        v = eq4_check(90, 7, lam)
        assert v.z_cap < 0 and not v.feasible and v.profile.Z == 0


def test_eq4_rejects_mismatch():
    with pytest.raises(InputError):
        eq4_check(70, 5, [18, 16, 14, 12, 11])


def test_policy_validation():
    with pytest.raises(InputError):
        Policy("best")


@pytest.mark.parametrize("d, s, ok", [(67, 4, True), (68, 4, False), (71, 5, True)])
def test_eq7_examples(d, s, ok):
    assert eq7_check(d, s)[1] is ok


def test_eq7_values():
    assert eq7_check(68, 4)[0] - 18 == Fraction(2101, 4)
    assert eq7_check(71, 5)[0] - 18 == Fraction(-22038, 25)


def test_eq7_hypotheses():
    with pytest.raises(InputError):
        eq7_check(17, 5)
    with pytest.raises(InputError):
        eq7_check(40, 3)


def test_eq7_cubics():
    assert eq7_cubic_coeffs(4) == (Fraction(1, 8), Fraction(-523, 64), Fraction(-29, 2), Fraction(-6))
    assert eq7_cubic_coeffs(5) == (Fraction(2, 25), Fraction(-27, 5), Fraction(-32), Fraction(-21))
    for s in (4, 5):
        coeffs = eq7_cubic_coeffs(s)
        for d in range(40, 91):
            assert eval_poly(coeffs, d) == eq7_check(d, s)[0] - 18


def test_eq7_max_degrees():
    assert certifier.eq7_max_degree(4) == 67
    assert certifier.eq7_max_degree(5) == 73
    f = eq7_cubic_coeffs(5)
    assert eval_poly(f, 73) < 0 < eval_poly(f, 74)


def test_s4_subbranch_cubic_follows_from_printed_quadratic():
    from surfbound.bounds import S4_SUBBRANCH_A, S4_SUBBRANCH_CUBIC, chi_closed_form, gp_bound

    def rhs(d):
        a = eval_poly(S4_SUBBRANCH_A, d)
        z = Fraction(3 * d, 4)
        return d * d - 5 * d - 10 * (gp_bound(d, 4) - 1) + 12 * chi_closed_form(d, 4) - (12 * a - 22 * z) - 18

    for d in range(1, 60):
        assert rhs(d) == eval_poly(S4_SUBBRANCH_CUBIC, d)


@pytest.mark.parametrize("s, expected", [(5, 66), (6, 44), (7, 43)])
def test_scan_reproduces_table(s, expected):
    rep = scan_degrees(s)
    assert rep.max_feasible_d == expected
    for d in rep.scanned:
        if d > expected:
            assert rep.verdicts[d] and not any(v.feasible for v in rep.verdicts[d])
    assert any(v.feasible for v in rep.verdicts[expected])


def test_scan_s4():
    assert scan_degrees(4).max_feasible_d == 64
    assert scan_degrees(4, policy=Policy("case_iii_slack")).max_feasible_d == 65


def test_scan_range_and_none():
    rep = scan_degrees(5, 60, 55)
    assert (rep.d_max, rep.d_min, rep.scanned[0]) == (60, 55, 60)
    assert scan_degrees(5, 73, 67).max_feasible_d is None
    with pytest.raises(InputError):
        scan_degrees(5, 50, 60)
    with pytest.raises(InputError):
        scan_degrees(3)


def test_weak_genus_moves_s5_to_70():
    v = eq4_check(70, 5, [18, 16, 14, 12, 10], WEAK)
    assert v.feasible and v.margin == -18
    assert not eq4_check(70, 5, [18, 16, 14, 12, 10]).feasible


def test_theorem():
    thm = certifier.theorem_bound()
    assert thm.bound == 66
    assert {b.label: b.bound for b in thm.branches} == {
        "s=3": 8, "s=4": 64, "s=5": 66, "s=6": 44, "s=7": 43, "s>=8": 66,
    }


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 30), st.integers(1, 2), st.integers(51, 120), st.integers(0, 120))
def test_more_zeros_never_lower_w(l1, gap, d, z):
    l0 = l1 + gap
    w0 = extremal_profile(l0, l1, d, z, True).W
    w1 = extremal_profile(l0, l1, d, z + 1, True).W
    assert w1 >= w0


def test_margins_are_exact_integers():
    for s in (4, 5, 6, 7):
        for v in scan_degrees(s).all_verdicts():
            assert type(v.margin) is int and type(v.w_max) is int and type(v.base) is int
            assert v.feasible == (v.base - v.w_max <= 18)
