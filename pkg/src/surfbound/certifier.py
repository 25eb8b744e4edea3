"""Feasibility of (d, s, lambda) against the master inequality, degree scans and the final bound.

For a configuration lambda with z sporadic zeros of profile alpha,

    2K^2 >= base - W,   base = d^2 - 5d - 10 genus_sum + 12 chi_sum,
                         W = sum alpha_t (12t - 22),

and 2K^2 <= 18.  A configuration survives iff base - W_max <= 18, where
W_max is the largest W over admissible profiles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .bounds import (
    EQ4_CONSTANT,
    chi_closed_form,
    chi_sum,
    constraint_threshold,
    ep_degree_threshold,
    gamma_cap_closed,
    genus_sum,
    gp_bound,
    pi_floor,
)
from .configs import ConnectedInvariants, enumerate_configs
from .errors import InputError
from .exact import Number, as_rational
from .sporadic import EMPTY, SporadicProfile, case_bound_A, extremal_profile, first_estimate_A

W_MODES = ("greedy", "case_formula", "case_iii_slack")

# Degrees known from outside the inequalities.
CUBIC_HYPERSURFACE_MAX_DEGREE = 8  # Koelblen: S on a cubic has degree <= 8
PUBLISHED_TABLE = {4: 65, 5: 66, 6: 44, 7: 43}
PUBLISHED_THEOREM = 66
PUBLISHED_EQ7_S5 = 71

DEFAULT_D_MAX = {4: 67, 5: 73, 6: 90, 7: 90}


@dataclass(frozen=True)
class Policy:
    """How W is maximized and how the genus floor is rounded.

    w_mode: "greedy" fills exactly z admissible slots; "case_formula" takes the
    printed case sum; "case_iii_slack" is the printed sum with column 1 also
    reaching degree r in case (iii).
    strict_genus: read K^2 < 6 chi strictly (see :func:`bounds.pi_floor`).
    """

    w_mode: str = "greedy"
    strict_genus: bool = True

    def __post_init__(self) -> None:
        if self.w_mode not in W_MODES:
            raise InputError(f"unknown W mode {self.w_mode!r}")

    @property
    def label(self) -> str:
        return self.w_mode + ("" if self.strict_genus else "+weak_genus")


DEFAULT_POLICY = Policy()


@dataclass(frozen=True)
class ConfigVerdict:
    config: ConnectedInvariants
    pi_floor: int
    z_cap: int
    constrained: bool
    case: str
    profile: SporadicProfile
    base: int
    a_greedy: int
    w_greedy: int
    a_case: int
    w_case: int
    w_max: int
    margin: int
    feasible: bool
    policy: Policy = DEFAULT_POLICY
    notes: tuple[str, ...] = ()

    @property
    def d(self) -> int:
        return self.config.d

    @property
    def s(self) -> int:
        return self.config.s

    def headline(self) -> str:
        word = "FEASIBLE" if self.feasible else "INFEASIBLE"
        return f"{word} margin={self.margin} z={self.z_cap} case={self.case}"


def hypotheses_hold(d: int, s: int) -> bool:
    """d > (s-1)^2 + 1, needed for the Gruson-Peskine and Braun-Floystad bounds."""
    return d > (s - 1) ** 2 + 1


def eq4_base(lam: ConnectedInvariants) -> int:
    d = lam.d
    return d * d - 5 * d - 10 * genus_sum(lam) + 12 * chi_sum(lam)


def eq4_check(
    d: int,
    s: int,
    lam: ConnectedInvariants | Sequence[int],
    policy: Policy = DEFAULT_POLICY,
    *,
    constrained: Optional[bool] = None,
) -> ConfigVerdict:
    """Verdict for one configuration.

    The secant-line constraints are used iff d exceeds
    :func:`bounds.constraint_threshold` unless ``constrained`` says otherwise.
    """
    if not isinstance(lam, ConnectedInvariants):
        lam = ConnectedInvariants(tuple(lam))
    if lam.d != d or lam.s != s:
        raise InputError(f"lambda {lam} has degree {lam.d} and {lam.s} parts, expected d={d}, s={s}")
    if s < 2:
        raise InputError("s must be >= 2")
    if constrained is None:
        constrained = d > constraint_threshold(s) if 4 <= s <= 7 else False

    notes = []
    if not hypotheses_hold(d, s):
        notes.append("d <= (s-1)^2+1: Eq(5)/Eq(6) hypotheses fail, gamma cap applied unguarded")
    pif = pi_floor(d, s, strict=policy.strict_genus)
    z = 1 + genus_sum(lam) - pif
    base = eq4_base(lam)
    if z < 0:
        notes.append("negative sporadic cap: excluded by Eq(8)")
        return ConfigVerdict(
            config=lam, pi_floor=pif, z_cap=z, constrained=constrained, case="-", profile=EMPTY,
            base=base, a_greedy=0, w_greedy=0, a_case=0, w_case=0, w_max=0,
            margin=base - EQ4_CONSTANT, feasible=False, policy=policy, notes=tuple(notes),
        )

    l0, l1 = lam[0], lam[1]
    profile = extremal_profile(l0, l1, d, z, constrained)
    if constrained:
        case, a_case = case_bound_A(l0, l1, d, z)
        _, a_slack = case_bound_A(l0, l1, d, z, slack=True)
    else:
        case, a_case = "naive", Fraction(profile.A)
        a_slack = a_case
    a_case, a_slack = int(a_case), int(a_slack)
    a_used = {"greedy": profile.A, "case_formula": a_case, "case_iii_slack": a_slack}[policy.w_mode]
    w_max = 12 * a_used - 22 * z
    margin = base - w_max - EQ4_CONSTANT
    if constrained and a_case > profile.A:
        notes.append(f"greedy fill drops {a_case - profile.A} from the printed case bound")
    return ConfigVerdict(
        config=lam, pi_floor=pif, z_cap=z, constrained=constrained, case=case, profile=profile,
        base=base, a_greedy=profile.A, w_greedy=profile.W, a_case=a_case, w_case=12 * a_case - 22 * z,
        w_max=w_max, margin=margin, feasible=margin <= 0, policy=policy, notes=tuple(notes),
    )


# -- Eq. (7): the aggregate inequality with first estimates ---------------------------------


def _eq7_value(d: Number, s: int) -> Fraction:
    d = as_rational(d)
    gamma = gamma_cap_closed(d, s)
    w = 12 * first_estimate_A(d, s) - 22 * gamma
    return d * d - 5 * d - 10 * (gp_bound(d, s) - 1) + 12 * chi_closed_form(d, s) - w


def eq7_check(d: int, s: int) -> tuple[Fraction, bool]:
    """Right side of the aggregate inequality with W replaced by 12 A_first - 22 gamma_cap."""
    if not 4 <= s <= 7:
        raise InputError("s must be in 4..7")
    if not hypotheses_hold(d, s):
        raise InputError(f"Eq(7) needs d > (s-1)^2+1 = {(s - 1) ** 2 + 1}")
    value = _eq7_value(d, s)
    return value, value <= EQ4_CONSTANT


def interpolate(xs: Sequence[Number], ys: Sequence[Number]) -> tuple[Fraction, ...]:
    """Exact coefficients (leading first) of the polynomial of degree < len(xs) through the points."""
    n = len(xs)
    rows = [[as_rational(x) ** (n - 1 - j) for j in range(n)] + [as_rational(y)] for x, y in zip(xs, ys)]
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        lead = rows[col][col]
        rows[col] = [v / lead for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return tuple(row[n] for row in rows)


EQ7_SAMPLE_DEGREES = (40, 50, 60, 70)


def eq7_cubic_coeffs(s: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Coefficients of (Eq. (7) right side) - 18 as a cubic in d.

    For s = 4, 5 case (iii) applies at every d, so the expression is a
    polynomial of degree 3 and four samples pin it down.
    """
    if s not in (4, 5):
        raise InputError("s must be 4 or 5")
    ys = [_eq7_value(d, s) - EQ4_CONSTANT for d in EQ7_SAMPLE_DEGREES]
    return interpolate(EQ7_SAMPLE_DEGREES, ys)


def eq7_max_degree(s: int, top: int = 200) -> int:
    """Largest d > (s-1)^2+1 at which the aggregate inequality still holds."""
    for d in range(top, (s - 1) ** 2 + 1, -1):
        if eq7_check(d, s)[1]:
            return d
    return (s - 1) ** 2 + 1


# -- scans --------------------------------------------------------------------------------


@dataclass
class ScanReport:
    s: int
    d_max: int
    d_min: int
    policy: Policy
    verdicts: dict[int, list[ConfigVerdict]] = field(default_factory=dict)
    max_feasible_d: Optional[int] = None

    @property
    def scanned(self) -> list[int]:
        return sorted(self.verdicts, reverse=True)

    def all_verdicts(self) -> list[ConfigVerdict]:
        return [v for d in self.scanned for v in self.verdicts[d]]


def default_d_min(s: int) -> int:
    """Lowest degree where the secant-line constraints are justified."""
    return constraint_threshold(s) + 1


def scan_degrees(
    s: int,
    d_max: Optional[int] = None,
    d_min: Optional[int] = None,
    policy: Policy = DEFAULT_POLICY,
) -> ScanReport:
    """Walk down from d_max and stop at the first degree with a surviving configuration."""
    if not 4 <= s <= 7:
        raise InputError("s must be in 4..7")
    d_max = DEFAULT_D_MAX[s] if d_max is None else d_max
    d_min = default_d_min(s) if d_min is None else d_min
    if d_min > d_max:
        raise InputError(f"empty degree range [{d_min}, {d_max}]")
    report = ScanReport(s=s, d_max=d_max, d_min=d_min, policy=policy)
    for d in range(d_max, d_min - 1, -1):
        verdicts = [eq4_check(d, s, lam, policy) for lam in enumerate_configs(d, s)]
        report.verdicts[d] = verdicts
        if any(v.feasible for v in verdicts):
            report.max_feasible_d = d
            break
    return report


@dataclass(frozen=True)
class TableRow:
    s: int
    published: int
    bounds: dict[str, Optional[int]]
    d_max: int
    d_min: int

    @property
    def computed(self) -> Optional[int]:
        return self.bounds[DEFAULT_POLICY.label]

    @property
    def deviation(self) -> Optional[int]:
        return None if self.computed is None else self.computed - self.published


TABLE_POLICIES = (
    DEFAULT_POLICY,
    Policy("case_formula"),
    Policy("case_iii_slack"),
    Policy("greedy", strict_genus=False),
)


def final_table(policies: Sequence[Policy] = TABLE_POLICIES) -> list[TableRow]:
    rows = []
    for s in (4, 5, 6, 7):
        bounds = {p.label: scan_degrees(s, policy=p).max_feasible_d for p in policies}
        rows.append(TableRow(s, PUBLISHED_TABLE[s], bounds, DEFAULT_D_MAX[s], default_d_min(s)))
    return rows


@dataclass(frozen=True)
class Branch:
    label: str
    bound: int
    source: str


@dataclass(frozen=True)
class TheoremReport:
    bound: int
    branches: tuple[Branch, ...]


def theorem_bound(policy: Policy = DEFAULT_POLICY) -> TheoremReport:
    """Maximum over the branches s = 3, s = 4..7 (scans) and s >= 8 (Prop. 2 with sigma = 7)."""
    branches = [Branch("s=3", CUBIC_HYPERSURFACE_MAX_DEGREE, "[K] surfaces on a cubic")]
    for s in (4, 5, 6, 7):
        found = scan_degrees(s, policy=policy).max_feasible_d
        bound = default_d_min(s) - 1 if found is None else found
        branches.append(Branch(f"s={s}", bound, f"Eq(4) scan, {policy.label}"))
    branches.append(Branch("s>=8", ep_degree_threshold(7), "Prop 2, sigma=7"))
    return TheoremReport(max(b.bound for b in branches), tuple(branches))
