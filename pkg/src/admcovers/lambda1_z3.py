"""lambda_1 over Z/3 admissible covers as a boundary expression.

The pushforward of lambda_1 to M_{0,T} is sum(alpha_i^j D_i^j); lambda_1
itself is 3 times the pullback of that sum.  The identity is checked by
pairing the expression with every one-dimensional boundary stratum.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .strata import (
    CurveClassZ3,
    DivisorClassZ3,
    Family,
    check_totals,
    classify_family,
    enumerate_curve_classes,
    enumerate_divisor_classes,
    pair_curve_divisor,
)

#: lambda_1 . gamma for curves pulling back to Family I.  Taken from an
#: external gerby Gromov-Witten computation, not derived here.
FAMILY_I_PAIRING = Fraction(2, 9)

#: lambda_1 = PULLBACK_FACTOR * pi^*(pushforward expression)
PULLBACK_FACTOR = Fraction(3)


def alpha_z3(i: int, j: int, n: int, m: int) -> Fraction:
    """Coefficient of D_i^j in the pushforward of lambda_1.

    Depends only on the side sizes t and T - t and on whether the node
    is unramified (i - j divisible by 3).  Unstable sides get 0.
    """
    if not (0 <= i <= n and 0 <= j <= m):
        raise ValueError(f"side ({i},{j}) outside totals ({n},{m})")
    T = n + m
    if T < 2:
        raise ValueError(f"need n + m >= 2, got ({n}, {m})")
    t = i + j
    if (i - j) % 3 == 0:
        return Fraction(2 * t * (T - t), 27 * (T - 1))
    return Fraction(2 * (t - 1) * (T - t - 1), 27 * (T - 1))


@dataclass(frozen=True)
class BoundaryExpression:
    n: int
    m: int
    entries: dict[DivisorClassZ3, Fraction]
    pullback_factor: Fraction = PULLBACK_FACTOR

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.entries[DivisorClassZ3(i, j, self.n, self.m)]

    def pair(self, curve: CurveClassZ3) -> Fraction:
        return sum(
            (a * pair_curve_divisor(curve, d) for d, a in self.entries.items()),
            Fraction(0),
        )


def lambda1_expression(n: int, m: int) -> BoundaryExpression:
    return BoundaryExpression(
        n, m, {d: alpha_z3(d.i, d.j, n, m) for d in enumerate_divisor_classes(n, m)}
    )


def pairing_total(curve: CurveClassZ3) -> Fraction:
    """Intersection of the pushforward expression with ``curve``."""
    return lambda1_expression(curve.n, curve.m).pair(curve)


def expected_pairing(curve: CurveClassZ3) -> Fraction:
    if classify_family(curve) is Family.I:
        return FAMILY_I_PAIRING
    return Fraction(0)


@dataclass
class VerificationReport:
    n: int
    m: int
    total_curves: int = 0
    family_counts: Counter = field(default_factory=Counter)
    failures: list[tuple[CurveClassZ3, Fraction, Fraction]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_theorem(n: int, m: int) -> VerificationReport:
    """Check the boundary expression against every curve class at (n, m)."""
    check_totals(n, m)
    expr = lambda1_expression(n, m)
    report = VerificationReport(n, m)
    for curve in enumerate_curve_classes(n, m):
        report.total_curves += 1
        report.family_counts[classify_family(curve)] += 1
        got, want = expr.pair(curve), expected_pairing(curve)
        if got != want:
            report.failures.append((curve, got, want))
    return report


def valid_totals(max_total: int, min_total: int = 4) -> list[tuple[int, int]]:
    """All (n, m) with n - m divisible by 3 and min_total <= n + m <= max_total."""
    return [
        (n, T - n)
        for T in range(min_total, max_total + 1)
        for n in range(T, -1, -1)
        if (2 * n - T) % 3 == 0
    ]


def verify_range(max_total: int) -> list[VerificationReport]:
    return [verify_theorem(n, m) for n, m in valid_totals(max_total)]
