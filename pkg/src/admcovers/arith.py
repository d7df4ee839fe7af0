"""Exact rational arithmetic and integer combinatorics.

Every quantity in the package is an exact :class:`fractions.Fraction`;
floating point is never used.
"""

from fractions import Fraction
from math import comb

Rational = Fraction


def rat(n: int, d: int = 1) -> Fraction:
    """Return the normalized rational ``n/d``.

    >>> rat(4, 6)
    Fraction(2, 3)
    >>> rat(3, -9)
    Fraction(-1, 3)
    """
    if d == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(n, d)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 for k outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def format_rational(q: Fraction) -> str:
    """Render ``q`` as ``p/q``, or just ``p`` for integers."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    return rat(int(num), int(den) if sep else 1)
