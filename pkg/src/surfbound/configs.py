"""Connected invariants of a generic hyperplane section and their enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import InputError


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    violations: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def validate_config(lam: Sequence[int], d: int, s: int) -> ValidityReport:
    """Check strict decrease, gaps in {1, 2}, positivity, length s and sum d.

    Every violated clause is listed; nothing is raised.
    """
    lam = list(lam)
    problems = []
    if len(lam) != s:
        problems.append(f"length {len(lam)} != s={s}")
    if any(x < 1 for x in lam):
        problems.append("all parts must be >= 1")
    for i in range(len(lam) - 1):
        gap = lam[i] - lam[i + 1]
        if gap not in (1, 2):
            problems.append(f"gap {gap} between lambda_{i}={lam[i]} and lambda_{i + 1}={lam[i + 1]} not in {{1,2}}")
    if sum(lam) != d:
        problems.append(f"sum {sum(lam)} != d={d}")
    return ValidityReport(not problems, tuple(problems))


@dataclass(frozen=True, order=True)
class ConnectedInvariants:
    """lambda_0 > ... > lambda_{s-1} >= 1 with consecutive gaps 1 or 2; degree d = sum."""

    lam: tuple[int, ...]
    d: int = field(init=False, compare=False)
    s: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        lam = tuple(int(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "d", sum(lam))
        object.__setattr__(self, "s", len(lam))
        report = validate_config(lam, self.d, self.s)
        if not lam or not report:
            raise InputError("invalid connected invariants %r: %s" % (lam, "; ".join(report.violations) or "empty"))

    @classmethod
    def parse(cls, text: str) -> "ConnectedInvariants":
        try:
            parts = [int(p) for p in text.replace(" ", "").split(",") if p]
        except ValueError as exc:
            raise InputError(f"malformed lambda list {text!r}") from exc
        return cls(tuple(parts))

    def __getitem__(self, i: int) -> int:
        return self.lam[i]

    def __iter__(self):
        return iter(self.lam)

    def __len__(self) -> int:
        return self.s

    def __str__(self) -> str:
        return ",".join(map(str, self.lam))


def enumerate_configs(d: int, s: int) -> list[ConnectedInvariants]:
    """All connected invariants of degree d with s parts, lexicographically descending.

    Each configuration is fixed by its last part and the s-1 gaps, so we run
    over the 2^(s-1) gap patterns and solve for the last part.
    """
    if not 1 <= s <= 10:
        raise InputError("s must be in 1..10")
    out = []
    for gaps in product((1, 2), repeat=s - 1):
        offsets = [sum(gaps[i:]) for i in range(s)]
        rest = d - sum(offsets)
        if rest >= s and rest % s == 0:
            last = rest // s
            out.append(ConnectedInvariants(tuple(last + o for o in offsets)))
    out.sort(key=lambda c: c.lam, reverse=True)
    return out


def lambda_caps(d: int, s: int) -> tuple[Fraction, Fraction]:
    """Upper bounds (d/s + s - 1, d/s + s - 2) on lambda_0 and lambda_1 implied by connectedness."""
    if s < 1:
        raise InputError("s must be >= 1")
    base = Fraction(d, s)
    return base + s - 1, base + s - 2
