"""Closed-form bounds: genus and chi sums, Gruson-Peskine, Braun-Floystad, gamma caps,
the double point formula and the degree thresholds used to reduce to s in {4,...,7}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb
from typing import Iterable, Optional

from .configs import ConnectedInvariants
from .errors import InputError
from .exact import Number, as_rational, binom_general, ceil_q, floor_q

# K^2 <= 9 for a surface not of general type of degree > 5, so 2K^2 <= 18.
K2_MAX = 9
EQ4_CONSTANT = 2 * K2_MAX


def _lam(lam: ConnectedInvariants | Iterable[int]) -> tuple[int, ...]:
    return lam.lam if isinstance(lam, ConnectedInvariants) else tuple(lam)


def genus_sum(lam: ConnectedInvariants | Iterable[int]) -> int:
    """sum_i C(lambda_i, 2) + (i - 1) lambda_i; the genus is 1 + this - (number of sporadic zeros)."""
    return sum(comb(x, 2) + (i - 1) * x for i, x in enumerate(_lam(lam)))


def chi_sum(lam: ConnectedInvariants | Iterable[int]) -> int:
    """sum_t C(lambda_t + t - 1, 3) - C(t - 1, 3), binomials taken as polynomials."""
    total = sum(binom_general(x + t - 1, 3) - binom_general(t - 1, 3) for t, x in enumerate(_lam(lam)))
    assert total.denominator == 1
    return int(total)


def gp_bound(d: Number, s: int) -> Fraction:
    """G(d, s) = d^2/(2s) + (s-4) d/2 + 1."""
    if s < 1:
        raise InputError("s must be >= 1")
    d = as_rational(d)
    return d * d / (2 * s) + (s - 4) * d / 2 + 1


def chi_closed_form(d: Number, s: int) -> Fraction:
    """s * C(d/s + (s-3)/2, 3) + 1 - C(s-1, 4)."""
    if s < 2:
        raise InputError("s must be >= 2")
    d = as_rational(d)
    return s * binom_general(d / s + Fraction(s - 3, 2), 3) + 1 - comb(s - 1, 4)


def gamma_cap_candidates(d: Number, s: int) -> tuple[Fraction, Fraction]:
    """(Ellingsrud-Peskine cap d(s-1)^2/(2s), cap from pi >= (d^2-5d+10)/10)."""
    d = as_rational(d)
    ep = d * (s - 1) ** 2 / (2 * s)
    dp = d * d / (2 * s) + (s - 4) * d / 2 - (d * d - 5 * d) / 10
    return ep, dp


def gamma_cap(d: Number, s: int) -> Fraction:
    """Upper bound on the genus defect G(d, s) - pi: the smaller of the two candidates."""
    if s < 1 or as_rational(d) < 1:
        raise InputError("need s >= 1 and d >= 1")
    return min(gamma_cap_candidates(d, s))


def gamma_cap_closed(d: Number, s: int) -> Fraction:
    """Per-s closed form of the gamma cap: 9d/8, d, d(90-d)/60, d(70-d)/35 for s = 4..7.

    Agrees with :func:`gamma_cap` once d is large enough (d >= 25 for s = 4).
    """
    d = as_rational(d)
    forms = {4: 9 * d / 8, 5: d, 6: d * (90 - d) / 60, 7: d * (70 - d) / 35}
    if s not in forms:
        raise InputError("s must be in 4..7")
    return forms[s]


def pi_floor(d: int, s: int, *, strict: bool = False) -> int:
    """Smallest sectional genus compatible with K^2 < 6 chi and the gamma cap.

    ``strict=False`` ceils max((d^2-5d+10)/10, G - gamma_cap).  ``strict=True``
    uses that K^2 < 6 chi is a strict inequality, so pi must exceed
    (d^2-5d+10)/10; this differs only when 10 | d^2 - 5d + 10, i.e. 5 | d.
    """
    if d < 1:
        raise InputError("d must be >= 1")
    dp = Fraction(d * d - 5 * d + 10, 10)
    dp_floor = floor_q(dp) + 1 if strict else ceil_q(dp)
    return max(dp_floor, ceil_q(gp_bound(d, s) - gamma_cap(d, s)))


def sporadic_cap(lam: ConnectedInvariants, *, strict: bool = False) -> int:
    """Maximal number of sporadic zeros, 1 + genus_sum - pi_floor; negative means infeasible."""
    return 1 + genus_sum(lam) - pi_floor(lam.d, lam.s, strict=strict)


@dataclass(frozen=True)
class BoundContext:
    d: int
    s: int
    pi_floor: int
    z_cap: int
    gamma_cap: Fraction
    strict: bool

    @property
    def feasible(self) -> bool:
        return self.z_cap >= 0


def bound_context(lam: ConnectedInvariants, *, strict: bool = False) -> BoundContext:
    return BoundContext(
        d=lam.d,
        s=lam.s,
        pi_floor=pi_floor(lam.d, lam.s, strict=strict),
        z_cap=sporadic_cap(lam, strict=strict),
        gamma_cap=gamma_cap(lam.d, lam.s),
        strict=strict,
    )


def double_point_k2(d: int, pi: int, chi: int) -> Fraction:
    """K^2 forced by the double point formula d^2 - 5d - 10(pi - 1) + 2(6 chi - K^2) = 0."""
    return 6 * Fraction(chi) + Fraction(d * d - 5 * d - 10 * (pi - 1), 2)


def double_point_residual(d: int, pi: int, chi: int, k2: Number) -> Fraction:
    return d * d - 5 * d - 10 * (pi - 1) + 2 * (6 * chi - as_rational(k2))


def ep_degree_threshold(sigma: int) -> int:
    """floor(5(sigma+1)(sigma-2)/(sigma-4)): degrees above it force S into a degree-sigma hypersurface."""
    if sigma not in (5, 6, 7):
        raise InputError("sigma must be 5, 6 or 7")
    return floor_q(Fraction(5 * (sigma + 1) * (sigma - 2), sigma - 4))


def lemma6_holds(d: int, s: int) -> bool:
    """G(d, s) >= (d/2 - 1)(d/2 - 2)/2, i.e. a plane curve of degree > d/2 fits the genus bound."""
    half = Fraction(d, 2)
    return gp_bound(d, s) >= (half - 1) * (half - 2) / 2


LEMMA6_SCAN_TOP = 200


@lru_cache(maxsize=None)
def lemma6_max_degree(s: int) -> Optional[int]:
    """Largest d satisfying :func:`lemma6_holds`, or None if it holds for every d (s = 4).

    For s = 4 the difference of the two sides is linear with positive slope,
    so it holds everywhere; for s >= 5 the right side wins eventually and a
    descending scan from LEMMA6_SCAN_TOP finds the threshold.
    """
    if not 4 <= s <= 7:
        raise InputError("s must be in 4..7")
    if s == 4:
        return None
    for d in range(LEMMA6_SCAN_TOP, 0, -1):
        if lemma6_holds(d, s):
            return d
    return 0


# Lemma 6, s = 4 sub-branch as printed: A <= 5/32 d^2 + 13/8 d - 3, then
# 0 >= d^3/8 - 23/8 d^2 - 17/2 d + 33.
S4_SUBBRANCH_A = (Fraction(5, 32), Fraction(13, 8), Fraction(-3))
S4_SUBBRANCH_CUBIC = (Fraction(1, 8), Fraction(-23, 8), Fraction(-17, 2), Fraction(33))


def eval_poly(coeffs: Iterable[Number], x: Number) -> Fraction:
    """Horner evaluation; coefficients from the leading term down."""
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def s4_subbranch_max_degree(top: int = LEMMA6_SCAN_TOP) -> int:
    """Largest d with the printed s = 4 sub-branch cubic <= 0."""
    for d in range(top, 0, -1):
        if eval_poly(S4_SUBBRANCH_CUBIC, d) <= 0:
            return d
    return 0


def s4_subbranch_naive_A(d: Number) -> Fraction:
    """The naive single-column sum with lambda_0 = d/4 + 3 and 3d/4 zeros (15/32 d^2 + 15/8 d)."""
    d = as_rational(d)
    lam0, z = d / 4 + 3, 3 * d / 4
    return z * (2 * lam0 + z - 1) / 2


@lru_cache(maxsize=None)
def constraint_threshold(s: int) -> int:
    """Degree above which no plane curve of degree > d/2 lies on S, so the secant constraints apply.

    s = 5, 6, 7 use the Lemma 6 inequality; for s = 4 the sub-branch cubic.
    """
    top = lemma6_max_degree(s)
    return s4_subbranch_max_degree() if top is None else top
