"""Borel-fixed monomial ideals in k[x0, x1, x2, x3] as a brute-force oracle for the genus formula.

An ideal is stored by its minimal generators as exponent 4-tuples.  In curve
mode no generator involves x3, which is the shape of gin(I_C) in reverse-lex
order.  Sporadic zeros, the x2-saturation, the connected invariants and the
Hilbert-function genus are all read off by direct enumeration.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .bounds import genus_sum
from .errors import InputError
from .sporadic import SporadicProfile

Monomial = tuple[int, int, int, int]
NVARS = 4


def divides(g: Monomial, m: Monomial) -> bool:
    return all(a <= b for a, b in zip(g, m))


def degree(m: Monomial) -> int:
    return sum(m)


def times(m: Monomial, var: int, k: int = 1) -> Monomial:
    out = list(m)
    out[var] += k
    return tuple(out)  # type: ignore[return-value]


def minimalize(monomials: Iterable[Monomial]) -> frozenset[Monomial]:
    """Drop every monomial divisible by a different one in the set."""
    kept: list[Monomial] = []
    for m in sorted(set(monomials), key=lambda m: (degree(m), m)):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return frozenset(kept)


def _sort_key(m: Monomial):
    return (degree(m), tuple(-e for e in m))


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class MonomialIdeal:
    generators: frozenset[Monomial]
    nvars: int = NVARS

    def __post_init__(self) -> None:
        gens = frozenset(tuple(g) + (0,) * (NVARS - len(g)) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        if self.nvars not in (3, 4):
            raise InputError("nvars must be 3 or 4")
        if not gens:
            raise InputError("the zero ideal is not supported")
        if any(len(g) != NVARS or min(g) < 0 for g in gens):
            raise InputError("exponents must be nonnegative 4-tuples")
        if self.nvars == 3 and any(g[3] for g in gens):
            raise InputError("x3 appears in a 3-variable ideal")
        if minimalize(gens) != gens:
            raise InputError("generator set is not minimal")

    @classmethod
    def of(cls, monomials: Iterable[Sequence[int]], nvars: int = NVARS) -> "MonomialIdeal":
        padded = [tuple(m) + (0,) * (NVARS - len(m)) for m in monomials]
        return cls(minimalize(padded), nvars)  # type: ignore[arg-type]

    def __contains__(self, m: Sequence[int]) -> bool:
        m = tuple(m) + (0,) * (NVARS - len(m))
        return any(divides(g, m) for g in self.generators)

    @property
    def curve_mode(self) -> bool:
        return all(g[3] == 0 for g in self.generators)

    @property
    def max_degree(self) -> int:
        return max(degree(g) for g in self.generators)

    def sorted_generators(self) -> list[Monomial]:
        return sorted(self.generators, key=_sort_key)

    def __str__(self) -> str:
        return ", ".join(format_monomial(g) for g in self.sorted_generators())


_VAR = re.compile(r"x([0-9]+)(?:\^(-?[0-9]+))?")


def parse_monomial(text: str) -> Monomial:
    body = "".join(text.split()).replace("*", "")
    if not body:
        raise InputError("empty monomial")
    exps = [0] * NVARS
    pos = 0
    while pos < len(body):
        match = _VAR.match(body, pos)
        if not match:
            raise InputError(f"cannot parse monomial {text!r} at {body[pos:]!r}")
        var = int(match.group(1))
        if var >= NVARS:
            raise InputError(f"unknown variable x{var}")
        exp = int(match.group(2)) if match.group(2) is not None else 1
        if exp <= 0:
            raise InputError(f"non-positive exponent in {text!r}")
        exps[var] += exp
        pos = match.end()
    return tuple(exps)  # type: ignore[return-value]


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse ``"x0^2, x0*x1, x1^3, x0*x2^3"``; whitespace is ignored and ``*`` is optional."""
    cleaned = "".join(text.split())
    pieces = cleaned.split(",")
    if not cleaned or any(not p for p in pieces):
        raise InputError(f"malformed ideal {text!r}")
    return MonomialIdeal.of(parse_monomial(p) for p in pieces)


# -- Borel moves ----------------------------------------------------------------------------


def borel_moves(m: Monomial) -> Iterator[Monomial]:
    """m * x_i / x_j for every i < j with x_j | m."""
    for j in range(NVARS):
        if m[j]:
            for i in range(j):
                out = list(m)
                out[j] -= 1
                out[i] += 1
                yield tuple(out)  # type: ignore[misc]


def is_borel_fixed(ideal: MonomialIdeal) -> bool:
    return all(u in ideal for g in ideal.generators for u in borel_moves(g))


def _require_curve_borel(ideal: MonomialIdeal) -> None:
    if not ideal.curve_mode:
        raise InputError("ideal involves x3; curve-gin mode required")
    if not is_borel_fixed(ideal):
        raise InputError("ideal is not Borel-fixed")


# -- sporadic zeros and saturation ------------------------------------------------------------


def column_floor(ideal: MonomialIdeal, a: int, b: int) -> Optional[int]:
    """Least c with x0^a x1^b x2^c in the ideal, None if the column never enters it."""
    cs = [g[2] for g in ideal.generators if g[0] <= a and g[1] <= b and g[3] == 0]
    return min(cs) if cs else None


def sporadic_zeros(ideal: MonomialIdeal) -> SporadicProfile:
    """Monomials x0^a x1^b x2^c outside the ideal with x0^a x1^b x2^c' inside for some c' > c."""
    _require_curve_borel(ideal)
    amax = max(g[0] for g in ideal.generators)
    bmax = max(g[1] for g in ideal.generators)
    degrees = []
    for a in range(amax + 2):
        for b in range(bmax + 2):
            c0 = column_floor(ideal, a, b)
            if c0:
                if a > amax or b > bmax:
                    raise InputError("infinitely many sporadic zeros: quotient is not curve-like")
                degrees.extend(range(a + b, a + b + c0))
    return SporadicProfile.from_degrees(degrees)


def saturate_restrict(ideal: MonomialIdeal) -> MonomialIdeal:
    """Set x3 = 0 and saturate by x2: strip x2 from every generator and re-minimalize."""
    if not ideal.curve_mode:
        raise InputError("ideal involves x3; curve-gin mode required")
    return MonomialIdeal.of(((g[0], g[1], 0, 0) for g in ideal.generators), ideal.nvars)


def connected_invariants_of(ideal: MonomialIdeal) -> tuple[int, ...]:
    """lambda of a point gin (x0^s, x0^(s-1) x1^lambda_(s-1), ..., x1^lambda_0).

    Only strict decrease is required, not gaps of 1 or 2.
    """
    gens = sorted(ideal.generators)
    if any(g[2] or g[3] for g in gens):
        raise InputError("not a point gin: generators involve x2 or x3")
    s = len(gens) - 1
    if [g[0] for g in gens] != list(range(s + 1)) or gens[-1][1] != 0 or s < 1:
        raise InputError(f"not of staircase form: {ideal}")
    lam = tuple(g[1] for g in gens[:-1])
    if any(x <= y for x, y in zip(lam, lam[1:])) or lam[-1] < 1:
        raise InputError(f"not of staircase form: {ideal}")
    return lam


def staircase_ideal(lam: Sequence[int]) -> MonomialIdeal:
    """(x0^s, x0^(s-1) x1^lambda_(s-1), ..., x1^lambda_0) for strictly decreasing lambda."""
    if any(x <= y for x, y in zip(lam, lam[1:])) or not lam or lam[-1] < 1:
        raise InputError("lambda must be strictly decreasing and positive")
    s = len(lam)
    return MonomialIdeal.of([(i, x, 0, 0) for i, x in enumerate(lam)] + [(s, 0, 0, 0)])


# -- Hilbert function --------------------------------------------------------------------------


def _monomials(deg: int, nvars: int) -> Iterator[tuple[int, ...]]:
    if nvars == 1:
        yield (deg,)
        return
    for first in range(deg, -1, -1):
        for rest in _monomials(deg - first, nvars - 1):
            yield (first,) + rest


def hilbert_function(ideal: MonomialIdeal, t: int, nvars: int = NVARS) -> int:
    """Number of degree-t monomials in nvars variables outside the ideal (direct count)."""
    pad = (0,) * (NVARS - nvars)
    return sum(1 for m in _monomials(t, nvars) if (m + pad) not in ideal)


STABLE_RUN = 3


def hilbert_genus(ideal: MonomialIdeal) -> tuple[int, int]:
    """(d, pi) from the Hilbert polynomial d t + 1 - pi of k[x0..x3]/I.

    Curve mode uses H(t) = sum_{u <= t} H'(u) with H' the count in x0, x1, x2,
    since x3 is a nonzerodivisor.  Stabilization is searched from the largest
    generator degree on (a Borel-fixed ideal is regular there) and must show
    three equal first differences before max degree + 4.
    """
    top = ideal.max_degree + 4
    if ideal.curve_mode:
        diffs = [hilbert_function(ideal, u, 3) for u in range(top + 1)]
        values = [sum(diffs[: t + 1]) for t in range(top + 1)]
    else:
        values = [hilbert_function(ideal, t) for t in range(top + 1)]
        diffs = [values[0]] + [values[t] - values[t - 1] for t in range(1, top + 1)]
    start = max(ideal.max_degree - 1, 1)
    for t in range(start, top - STABLE_RUN + 2):
        run = diffs[t : t + STABLE_RUN]
        if len(set(run)) == 1:
            d = run[0]
            if d == 0:
                raise InputError("not curve-like: Hilbert polynomial is constant")
            stable_t = t + STABLE_RUN - 1
            return d, 1 + d * stable_t - values[stable_t]
    raise InputError("not curve-like: Hilbert differences do not stabilize")


# -- lifting and the genus cross-check ------------------------------------------------------------


def is_liftable(ideal: MonomialIdeal, m: Monomial) -> bool:
    """Removing m keeps the ideal Borel-fixed iff no inverse Borel move of m lands in it."""
    for i in range(NVARS):
        if m[i]:
            for j in range(i + 1, NVARS):
                u = list(m)
                u[i] -= 1
                u[j] += 1
                if tuple(u) in ideal:
                    return False
    return True


def lift(ideal: MonomialIdeal, m: Sequence[int]) -> MonomialIdeal:
    """Replace generator m by m*x0, m*x1, m*x2: one new sporadic zero, in degree deg(m)."""
    m = tuple(m) + (0,) * (NVARS - len(m))
    if m not in ideal.generators:
        raise InputError(f"{format_monomial(m)} is not a minimal generator")
    if not ideal.curve_mode:
        raise InputError("ideal involves x3; curve-gin mode required")
    if not is_liftable(ideal, m):
        raise InputError(f"removing {format_monomial(m)} breaks Borel-fixedness")
    rest = [g for g in ideal.generators if g != m]
    return MonomialIdeal.of(rest + [times(m, 0), times(m, 1), times(m, 2)], ideal.nvars)


@dataclass(frozen=True)
class Eq3Sides:
    pi_hilbert: int
    d_hilbert: int
    lam: tuple[int, ...]
    zeros: int

    @property
    def pi_formula(self) -> int:
        return 1 + genus_sum(self.lam) - self.zeros

    @property
    def holds(self) -> bool:
        return self.pi_hilbert == self.pi_formula and self.d_hilbert == sum(self.lam)


def eq3_sides(ideal: MonomialIdeal) -> Eq3Sides:
    _require_curve_borel(ideal)
    d, pi = hilbert_genus(ideal)
    lam = connected_invariants_of(saturate_restrict(ideal))
    return Eq3Sides(pi, d, lam, sporadic_zeros(ideal).Z)


def eq3_crosscheck(ideal: MonomialIdeal) -> bool:
    """Hilbert genus == 1 + genus_sum(lambda of the saturation) - number of sporadic zeros."""
    return eq3_sides(ideal).holds


@dataclass(frozen=True)
class LiftedIdeal:
    lam: tuple[int, ...]
    ideal: MonomialIdeal
    lift_degrees: tuple[int, ...]
    borel_each_step: bool
    saturation_each_step: bool


def random_lifted_ideal(
    rng: random.Random, max_s: int = 4, max_lambda0: int = 12, max_lifts: int = 10
) -> LiftedIdeal:
    """Random strictly decreasing lambda -> staircase ideal -> up to max_lifts random lifts."""
    s = rng.randint(1, max_s)
    lam = tuple(sorted(rng.sample(range(1, max_lambda0 + 1), s), reverse=True))
    ideal = staircase_ideal(lam)
    sat = saturate_restrict(ideal)
    degrees = []
    borel_ok = sat_ok = True
    for _ in range(rng.randint(0, max_lifts)):
        options = [g for g in ideal.sorted_generators() if is_liftable(ideal, g)]
        if not options:
            break
        m = rng.choice(options)
        ideal = lift(ideal, m)
        degrees.append(degree(m))
        borel_ok &= is_borel_fixed(ideal)
        sat_ok &= saturate_restrict(ideal) == sat
    return LiftedIdeal(lam, ideal, tuple(sorted(degrees)), borel_ok, sat_ok)


@dataclass(frozen=True)
class OracleTrial:
    index: int
    lam: tuple[int, ...]
    ideal: str
    lifts: int
    pi_hilbert: int
    pi_formula: int
    eq3: bool
    profile_matches: bool
    borel: bool
    saturation: bool

    @property
    def ok(self) -> bool:
        return self.eq3 and self.profile_matches and self.borel and self.saturation


def run_oracle(trials: int, seed: int) -> list[OracleTrial]:
    """Seeded randomized check of the genus formula on lifted staircase ideals."""
    rng = random.Random(seed)
    out = []
    for k in range(trials):
        sample = random_lifted_ideal(rng)
        sides = eq3_sides(sample.ideal)
        profile = sporadic_zeros(sample.ideal)
        observed = tuple(t for t, a in profile.counts for _ in range(a))
        out.append(
            OracleTrial(
                index=k,
                lam=sample.lam,
                ideal=str(sample.ideal),
                lifts=len(sample.lift_degrees),
                pi_hilbert=sides.pi_hilbert,
                pi_formula=sides.pi_formula,
                eq3=sides.holds and sides.lam == sample.lam,
                profile_matches=observed == sample.lift_degrees,
                borel=sample.borel_each_step,
                saturation=sample.saturation_each_step,
            )
        )
    return out
