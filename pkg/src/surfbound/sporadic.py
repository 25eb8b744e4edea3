"""Sporadic-zero profiles that maximize A = sum alpha_t t under the secant-line constraints.

Zeros sit in two columns of the gin: column 0 starts in degree lambda_0 and
column 1 in degree lambda_1 + 1.  With the constraints active a single
generator may not reach past degree d/2 unless a second one sits one degree
lower, which gives the three cases:

  (i)   lambda_0 + z - 1 <= d/2          column 0 only
  (ii)  lambda_0 + lambda_1 + z - 1 <= d  column 0 up to floor(d/2), rest in column 1
  (iii) otherwise                        both columns up to r = ceil((lambda_0 + lambda_1 + z)/2)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .bounds import gamma_cap_closed
from .configs import lambda_caps
from .errors import InputError
from .exact import Number, as_rational, ceil_q, poly_range_sum, range_sum

UNCONSTRAINED = "unconstrained"
CASE_MODES = {"i": "constrained-case-i", "ii": "constrained-case-ii", "iii": "constrained-case-iii"}


@dataclass(frozen=True)
class SporadicProfile:
    """alpha_t as sorted (degree, count) pairs; absent degrees have no zeros."""

    counts: tuple[tuple[int, int], ...]
    mode: str = UNCONSTRAINED

    @classmethod
    def from_degrees(cls, degrees: Iterable[int], mode: str = UNCONSTRAINED) -> "SporadicProfile":
        c = Counter(degrees)
        if any(t < 1 for t in c):
            raise InputError("sporadic zeros live in degree >= 1")
        return cls(tuple(sorted(c.items())), mode)

    @property
    def A(self) -> int:
        return sum(t * a for t, a in self.counts)

    @property
    def Z(self) -> int:
        return sum(a for _, a in self.counts)

    @property
    def W(self) -> int:
        return sum(a * (12 * t - 22) for t, a in self.counts)

    @property
    def top_degree(self) -> int:
        return self.counts[-1][0] if self.counts else 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def __str__(self) -> str:
        return " ".join(f"{t}:{a}" for t, a in self.counts) or "-"


EMPTY = SporadicProfile(())


def profile_stats(profile: SporadicProfile) -> tuple[int, int, int]:
    """(A, Z, W) with A = sum alpha_t t, Z = sum alpha_t, W = sum alpha_t (12t - 22) = 12A - 22Z."""
    return profile.A, profile.Z, profile.W


def select_case(lambda0: Number, lambda1: Number, d: int, z: Number) -> str:
    if lambda0 + z - 1 <= as_rational(d) / 2:
        return "i"
    if lambda0 + lambda1 + z - 1 <= d:
        return "ii"
    return "iii"


def case_iii_top(lambda0: int, lambda1: int, z: int) -> int:
    return ceil_q(Fraction(lambda0 + lambda1 + z, 2))


def _column_tops(lambda0: int, lambda1: int, d: int, z: int, case: str, slack: bool) -> tuple[int, int]:
    """Top slot degree of (column 0, column 1); column 1 is empty when its top is lambda_1."""
    if case == "i":
        return lambda0 + z - 1, lambda1
    if case == "ii":
        return d // 2, z - d // 2 + lambda0 + lambda1 - 1
    r = case_iii_top(lambda0, lambda1, z)
    return r, r if slack else r - 1


def case_bound_A(lambda0: int, lambda1: int, d: int, z: int, *, slack: bool = False) -> tuple[str, Fraction]:
    """The printed case bound on A for integer data, with the case that applies.

    ``slack=True`` lets column 1 reach degree r in case (iii) as well; it only
    exists to measure how much the final table depends on that top slot.
    """
    if lambda1 >= lambda0:
        raise InputError("need lambda_0 > lambda_1")
    if z < 0:
        raise InputError("z must be >= 0")
    case = select_case(lambda0, lambda1, d, z)
    if z == 0:
        return case, Fraction(0)
    top0, top1 = _column_tops(lambda0, lambda1, d, z, case, slack)
    return case, Fraction(range_sum(lambda0, top0) + range_sum(lambda1 + 1, top1))


def case_formula_rational(lambda0: Number, lambda1: Number, d: Number, z: Number) -> tuple[str, Fraction]:
    """Case bound with rational data: sums as polynomials in their endpoints, r not rounded."""
    lambda0, lambda1, z = as_rational(lambda0), as_rational(lambda1), as_rational(z)
    case = select_case(lambda0, lambda1, d, z)
    if case == "i":
        return case, poly_range_sum(lambda0, lambda0 + z - 1)
    if case == "ii":
        h = as_rational(d) // 2
        return case, poly_range_sum(lambda0, h) + poly_range_sum(lambda1 + 1, z - h + lambda0 + lambda1 - 1)
    r = (lambda0 + lambda1 + z) / 2
    return case, poly_range_sum(lambda0, r) + poly_range_sum(lambda1 + 1, r - 1)


def extremal_profile(
    lambda0: int, lambda1: int, d: int, z: int, constrained: bool, *, slack: bool = False
) -> SporadicProfile:
    """Place z zeros on the z highest admissible slots.

    Unconstrained: one column from lambda_0 upward.  Constrained: the slot set
    of the applicable case; when it holds more than z slots the lowest ones are
    dropped, column 1 first on ties.
    """
    if z < 0:
        raise InputError("z must be >= 0")
    if z == 0:
        mode = CASE_MODES[select_case(lambda0, lambda1, d, 0)] if constrained else UNCONSTRAINED
        return SporadicProfile((), mode)
    if not constrained:
        return SporadicProfile.from_degrees(range(lambda0, lambda0 + z), UNCONSTRAINED)
    if lambda1 >= lambda0:
        raise InputError("need lambda_0 > lambda_1")
    case = select_case(lambda0, lambda1, d, z)
    top0, top1 = _column_tops(lambda0, lambda1, d, z, case, slack)
    slots = [(t, 0) for t in range(lambda0, top0 + 1)] + [(t, 1) for t in range(lambda1 + 1, top1 + 1)]
    if len(slots) < z:
        raise InputError(f"infeasible placement: {len(slots)} slots for {z} zeros")
    slots.sort(key=lambda slot: (-slot[0], slot[1]))
    return SporadicProfile.from_degrees((t for t, _ in slots[:z]), CASE_MODES[case])


def first_estimate_A(d: Number, s: int) -> Fraction:
    """Case bound on A at the connectedness caps for lambda_0, lambda_1 and z = closed-form gamma cap.

    Evaluates to 153/256 d^2 + 45/16 d + 1/4 for s = 4 and 9/20 d^2 + 7/2 d + 1/4
    for s = 5.  Defined for s = 6, 7 as well, where Eq. (7) needs it.
    """
    if not 4 <= s <= 7:
        raise InputError("s must be in 4..7")
    d = as_rational(d)
    lam0, lam1 = lambda_caps(d, s)
    z = gamma_cap_closed(d, s)
    return case_formula_rational(lam0, lam1, d, z)[1]
