"""Degree-2 admissible covers: lambda_1 and lambda_2 boundary coefficients.

lambda_2 = lambda_1^2 / 2, and squaring the divisor expression for lambda_1
expresses each codimension-2 coefficient through products of lambda_1
coefficients on the two sides of a node ("composed" form).  The published
closed forms are kept for comparison; the all-even one drops a 2*i2^2
term from its numerator, which ``corrected=True`` restores.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

#: Overall factor in front of sum(alpha * Delta).  The two published
#: statements disagree (1 vs 2), so both are carried as metadata.
NORMALIZATIONS = (Fraction(1), Fraction(2))

FORMS = ("composed", "closed-printed", "closed-corrected")


def _check_branch(N: int, minimum: int) -> None:
    if N % 2 or N < minimum:
        raise ValueError(f"number of branch points must be even and >= {minimum}, got {N}")


@dataclass(frozen=True)
class DivisorClassZ2:
    """Delta_i with i branch points on one side, stored with i <= N - i."""

    i: int
    N: int

    def __post_init__(self):
        _check_branch(self.N, 4)
        if not 2 <= self.i <= self.N - 2:
            raise ValueError(f"unstable divisor Delta_{self.i} with N={self.N}")
        object.__setattr__(self, "i", min(self.i, self.N - self.i))

    def __str__(self):
        return f"Delta({self.i})"


def alpha_z2_lambda1(i: int, N: int) -> Fraction:
    _check_branch(N, 4)
    if not 0 <= i <= N:
        raise ValueError(f"i={i} outside 0..{N}")
    if i % 2 == 0:
        return Fraction(i * (N - i), 8 * (N - 1))
    return Fraction((i - 1) * (N - i - 1), 8 * (N - 1))


def lambda1_expression_z2(N: int) -> dict[DivisorClassZ2, Fraction]:
    _check_branch(N, 4)
    return {DivisorClassZ2(i, N): alpha_z2_lambda1(i, N) for i in range(2, N // 2 + 1)}


@dataclass(frozen=True, order=True)
class Codim2ClassZ2:
    """Delta_{i1,i2,i3}: a chain of three components, stored with i1 <= i3."""

    i1: int
    i2: int
    i3: int

    def __post_init__(self):
        if self.i1 < 2 or self.i2 < 1 or self.i3 < 2:
            raise ValueError(f"unstable stratum {self.triple}")
        if self.N % 2:
            raise ValueError(f"odd number of branch points in {self.triple}")
        if self.i3 < self.i1:
            i1, i3 = self.i3, self.i1
            object.__setattr__(self, "i1", i1)
            object.__setattr__(self, "i3", i3)

    @property
    def N(self) -> int:
        return self.i1 + self.i2 + self.i3

    @property
    def triple(self) -> tuple[int, int, int]:
        return self.i1, self.i2, self.i3

    @property
    def all_even(self) -> bool:
        return not (self.i1 % 2 or self.i2 % 2 or self.i3 % 2)

    def __str__(self):
        return f"Delta({self.i1},{self.i2},{self.i3})"


ClassLike = Union[Codim2ClassZ2, tuple]


def _as_triple(c: ClassLike) -> tuple[int, int, int]:
    if isinstance(c, Codim2ClassZ2):
        return c.triple
    i1, i2, i3 = c
    Codim2ClassZ2(i1, i2, i3)  # validation only; keeps the given orientation
    return i1, i2, i3


def alpha_z2_lambda2_composed(c: ClassLike) -> Fraction:
    """Coefficient of Delta_{i1,i2,i3} via products of lambda_1 coefficients.

    Accepts a class or an ordered triple; ordered triples are evaluated
    as given, so mirror symmetry can be checked directly.
    """
    i1, i2, i3 = _as_triple(c)
    N = i1 + i2 + i3
    a = alpha_z2_lambda1
    p1, p2, p3 = i1 % 2, i2 % 2, i3 % 2
    if (p1, p2, p3) == (0, 0, 0):
        return 2 * (a(i1, N) * a(i2, i2 + i3) + a(i3, N) * a(i2, i1 + i2))
    if (p1, p2, p3) == (1, 0, 1):
        return 2 * (a(i1, N) * a(i2 + 1, i2 + i3 + 1) + a(i3, N) * a(i2 + 1, i1 + i2 + 1))
    if (p1, p2, p3) == (1, 1, 0):
        return 2 * (a(i1, N) * a(i2 + 1, i2 + i3 + 1) + a(i3, N) * a(i2, i1 + i2))
    # (0, 1, 1): mirror image of the odd-odd-even chain
    return alpha_z2_lambda2_composed((i3, i2, i1))


def alpha_z2_lambda2_closed(c: ClassLike, corrected: bool = False) -> Fraction:
    i1, i2, i3 = _as_triple(c)
    N = i1 + i2 + i3
    p1, p2, p3 = i1 % 2, i2 % 2, i3 % 2
    if (p1, p2, p3) == (0, 0, 0):
        inner = 2 * i1 * i2 + 2 * i1 * i3 + 2 * i2 * i3 - i1 - 2 * i2 - i3
        if corrected:
            inner += 2 * i2 * i2
        return Fraction(
            i1 * i2 * i3 * inner,
            32 * (N - 1) * (i1 + i2 - 1) * (i2 + i3 - 1),
        )
    if (p1, p2, p3) == (1, 0, 1):
        return Fraction(
            (i1 - 1) * i2 * (i3 - 1) * ((i2 + i3 - 1) * (i1 + i2) + (i1 + i2 - 1) * (i2 + i3)),
            32 * (N - 1) * (i1 + i2) * (i2 + i3),
        )
    if (p1, p2, p3) == (1, 1, 0):
        return Fraction(
            (i1 - 1) * (i2 + i3 - 1) * (i2 + 1) * i3 * (i1 + i2 - 1)
            + i3 * (i1 + i2) * (i2 - 1) * (i1 - 1) * (i2 + i3),
            32 * (N - 1) * (i2 + i3) * (i1 + i2 - 1),
        )
    return alpha_z2_lambda2_closed((i3, i2, i1), corrected)


def alpha_z2_lambda2(c: ClassLike, form: str = "composed") -> Fraction:
    if form == "composed":
        return alpha_z2_lambda2_composed(c)
    if form == "closed-printed":
        return alpha_z2_lambda2_closed(c, corrected=False)
    if form == "closed-corrected":
        return alpha_z2_lambda2_closed(c, corrected=True)
    raise ValueError(f"unknown form {form!r}; expected one of {FORMS}")


def enumerate_codim2_classes(N: int) -> list[Codim2ClassZ2]:
    _check_branch(N, 6)
    out = []
    for i1 in range(2, N):
        for i2 in range(1, N - i1 - 1):
            i3 = N - i1 - i2
            if i3 >= i1:
                out.append(Codim2ClassZ2(i1, i2, i3))
    return out


@dataclass(frozen=True)
class Lambda2Expression:
    """lambda_2 = normalization * sum(coefficients[c] * Delta_c).

    ``normalizations`` lists the overall factors in use in the literature;
    the coefficients themselves never include it.
    """

    N: int
    form: str
    coefficients: dict[Codim2ClassZ2, Fraction]
    normalizations: tuple[Fraction, ...] = NORMALIZATIONS


def lambda2_expression(N: int, form: str = "composed") -> Lambda2Expression:
    return Lambda2Expression(
        N, form, {c: alpha_z2_lambda2(c, form) for c in enumerate_codim2_classes(N)}
    )


def check_forms(
    max_N: int, corrected: bool = False
) -> list[tuple[Codim2ClassZ2, Fraction, Fraction]]:
    """Classes with N <= max_N where the closed form differs from the composed one."""
    if max_N < 6:
        raise ValueError(f"max_N must be >= 6, got {max_N}")
    out = []
    for N in range(6, max_N + 1, 2):
        for c in enumerate_codim2_classes(N):
            composed = alpha_z2_lambda2_composed(c)
            closed = alpha_z2_lambda2_closed(c, corrected)
            if composed != closed:
                out.append((c, composed, closed))
    return out
