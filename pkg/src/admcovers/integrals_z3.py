"""Hodge integrals of lambda_1^{n+m-3} over Z/3 admissible cover spaces.

The recursion replaces one lambda_1 by its boundary expression and splits
the remaining power over the two sides of each divisor.  It is applied
only for n + m >= 5; the values at n + m = 3 and at (2, 2) are fixed
inputs (applying the recursion at (2, 2) gives 2/81, not 2/9).

Keys are reflected to n >= m before the recursion is applied.  The
recursion as written only sums over i - j = 2 mod 3 and is not symmetric
under swapping n and m on its own; reflecting reproduces every tabulated
value and makes the integral symmetric by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .arith import binomial

BASE_CASES = {
    # n + m = 3 is handled generically
    (2, 2): Fraction(2, 9),
}
POINT_VALUE = Fraction(1, 3)

#: Values as printed in the published table, keyed (n, m) with n >= m.
PRINTED_TABLE = {
    (3, 0): Fraction(1, 3),
    (2, 2): Fraction(2, 9),
    (4, 1): Fraction(4, 27),
    (6, 0): Fraction(8, 27),
    (3, 3): Fraction(128, 135),
    (5, 2): Fraction(3392, 729),
    (4, 4): Fraction(446923, 5103),
}


@dataclass(frozen=True, order=True)
class IntegralKey:
    n: int
    m: int

    @property
    def total(self) -> int:
        return self.n + self.m

    @property
    def dimension(self) -> int:
        return self.n + self.m - 3

    @property
    def genus(self) -> int:
        return self.n + self.m - 2

    @property
    def is_valid(self) -> bool:
        return self.n >= 0 and self.m >= 0 and (self.n - self.m) % 3 == 0 and self.total >= 3

    def canonical(self) -> IntegralKey:
        return self if self.n >= self.m else IntegralKey(self.m, self.n)

    def __str__(self):
        return f"({self.n},{self.m})"


def _key(key) -> IntegralKey:
    k = key if isinstance(key, IntegralKey) else IntegralKey(*key)
    if not k.is_valid:
        raise ValueError(f"invalid integral key {k}: need n - m = 0 mod 3 and n + m >= 3")
    return k


def is_base_case(key) -> bool:
    k = _key(key)
    return k.total == 3 or (k.n, k.m) in BASE_CASES


def term_admissible(i: int, j: int, n: int, m: int) -> bool:
    if not (0 <= i <= n and 0 <= j <= m):
        raise ValueError(f"term ({i},{j}) outside (0..{n}, 0..{m})")
    return (i - j) % 3 == 2 and i + j >= 2


def term_coefficient(i: int, j: int, n: int, m: int) -> Fraction:
    T = n + m
    return Fraction(2 * (i + j - 1) * (T - i - j - 1), 9 * (T - 1))


def combinatorial_factor(i: int, j: int, n: int, m: int) -> int:
    return binomial(n + m - 3, i + j - 2) * binomial(n, i) * binomial(m, j)


@dataclass(frozen=True)
class TermTrace:
    i: int
    j: int
    coefficient: Fraction
    combinatorial_factor: int
    left_key: IntegralKey
    right_key: IntegralKey
    term_value: Fraction


class HodgeIntegrator:
    """Evaluates the recursion, optionally memoized.

    ``on_subkey(parent, term, child)`` is called for every sub-integral the
    recursion actually requests; it lets callers audit the recursion.
    """

    def __init__(
        self,
        memoize: bool = True,
        on_subkey: Optional[Callable[[IntegralKey, tuple[int, int], IntegralKey], None]] = None,
    ):
        self.memoize = memoize
        self.on_subkey = on_subkey
        self._memo: dict[IntegralKey, Fraction] = {}

    def clear(self) -> None:
        self._memo.clear()

    def __call__(self, key) -> Fraction:
        k = _key(key).canonical()
        if self.memoize and k in self._memo:
            return self._memo[k]
        value = self._evaluate(k)
        if self.memoize:
            self._memo[k] = value
        return value

    def _evaluate(self, k: IntegralKey) -> Fraction:
        if k.total == 3:
            return POINT_VALUE
        if (k.n, k.m) in BASE_CASES:
            return BASE_CASES[k.n, k.m]
        return 3 * sum((t.term_value for t in self.terms(k)), Fraction(0))

    def terms(self, key) -> list[TermTrace]:
        """Summands of the recursion for ``key``, zero-coefficient ones included."""
        k = _key(key)
        n, m = k.n, k.m
        out = []
        for i in range(n + 1):
            for j in range(m + 1):
                if not term_admissible(i, j, n, m):
                    continue
                coef = term_coefficient(i, j, n, m)
                factor = combinatorial_factor(i, j, n, m)
                left, right = IntegralKey(i + 1, j), IntegralKey(n - i, m - j + 1)
                value = Fraction(0)
                if coef and factor:
                    for child in (left, right):
                        if self.on_subkey is not None:
                            self.on_subkey(k, (i, j), child)
                    value = coef * factor * self(left) * self(right)
                out.append(TermTrace(i, j, coef, factor, left, right, value))
        return out


_default = HodgeIntegrator()


def hodge_integral(key) -> Fraction:
    """Integral of lambda_1^{n+m-3} over Adm(n|m); ``key`` is (n, m) or an IntegralKey."""
    return _default(key)


def trace_terms(key) -> list[TermTrace]:
    """Per-term breakdown of the recursion at ``key`` as reflected to n >= m.

    3 * sum(term_value) equals ``hodge_integral(key)``.
    """
    k = _key(key)
    if is_base_case(k):
        raise ValueError(f"{k} is a base case; there are no recursion terms")
    return _default.terms(k.canonical())


def integral_table(max_total: int) -> list[tuple[IntegralKey, Fraction]]:
    if max_total < 3:
        raise ValueError(f"max_total must be >= 3, got {max_total}")
    rows = []
    for T in range(3, max_total + 1):
        for n in range(T, (T + 1) // 2 - 1, -1):
            k = IntegralKey(n, T - n)
            if k.n >= k.m and k.is_valid:
                rows.append((k, hodge_integral(k)))
    return rows


def printed_discrepancy(key) -> Optional[Fraction]:
    """The printed table value at ``key`` if it differs from the computed one."""
    k = _key(key).canonical()
    printed = PRINTED_TABLE.get((k.n, k.m))
    if printed is not None and printed != hodge_integral(k):
        return printed
    return None
