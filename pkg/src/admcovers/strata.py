"""Symmetrized boundary strata of M_{0,T} for Z/3 covers.

A marked point carries monodromy omega or omegabar, so a set of marked
points is summarized by the pair (omega count, omegabar count).  One
dimensional strata are recorded by the four blocks hanging off their
four-valent component; boundary divisors by one side of their split.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

#: Display names for node residues.  Only the residue-0 / nonzero split
#: enters any computation, so the omega/omegabar labels are cosmetic.
RESIDUE_NAMES = {0: "e", 1: "omega", 2: "omegabar"}


class Family(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


_FAMILY_BY_RESIDUES = {
    (1, 1, 2, 2): Family.I,
    (0, 1, 1, 1): Family.II,
    (0, 2, 2, 2): Family.II,
    (0, 0, 1, 2): Family.III,
    (0, 0, 0, 0): Family.IV,
}


def check_totals(n: int, m: int, min_total: int = 4) -> None:
    if n < 0 or m < 0:
        raise ValueError(f"point counts must be non-negative, got ({n}, {m})")
    if (n - m) % 3:
        raise ValueError(f"n - m must be divisible by 3, got ({n}, {m})")
    if n + m < min_total:
        raise ValueError(f"need n + m >= {min_total}, got ({n}, {m})")


@dataclass(frozen=True, order=True)
class BlockZ3:
    omega_count: int
    omegabar_count: int

    def __post_init__(self):
        if self.omega_count < 0 or self.omegabar_count < 0:
            raise ValueError(f"negative counts in block {self}")
        if self.omega_count + self.omegabar_count < 1:
            raise ValueError("a block must carry at least one marked point")

    @property
    def size(self) -> int:
        return self.omega_count + self.omegabar_count

    def __str__(self):
        return f"({self.omega_count},{self.omegabar_count})"


def node_residue(block: BlockZ3) -> int:
    return (block.omega_count - block.omegabar_count) % 3


@dataclass(frozen=True)
class CurveClassZ3:
    """A one-dimensional symmetrized stratum, as a sorted tuple of 4 blocks."""

    blocks: tuple[BlockZ3, ...]

    def __post_init__(self):
        blocks = tuple(sorted(self.blocks))
        object.__setattr__(self, "blocks", blocks)
        if len(blocks) != 4:
            raise ValueError(f"a curve class has exactly 4 blocks, got {len(blocks)}")
        check_totals(self.n, self.m)

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> CurveClassZ3:
        return cls(tuple(BlockZ3(i, j) for i, j in pairs))

    @property
    def n(self) -> int:
        return sum(b.omega_count for b in self.blocks)

    @property
    def m(self) -> int:
        return sum(b.omegabar_count for b in self.blocks)

    def residues(self) -> tuple[int, ...]:
        return tuple(sorted(node_residue(b) for b in self.blocks))

    def __str__(self):
        return "{" + ",".join(str(b) for b in self.blocks) + "}"


def classify_family(curve: CurveClassZ3) -> Family:
    return _FAMILY_BY_RESIDUES[curve.residues()]


def _canonical_side(i: int, j: int, n: int, m: int) -> tuple[int, int]:
    # smaller side first; on a tie keep the omega-heavier representative
    ci, cj = n - i, m - j
    if (i + j, -i, -j) <= (ci + cj, -ci, -cj):
        return i, j
    return ci, cj


@dataclass(frozen=True)
class DivisorClassZ3:
    """Symmetrized divisor D_i^j for totals (n, m).

    The stored side is the one with fewer marked points; when both sides
    have the same size the side with more omega points is kept.  Any
    representative may be passed in.
    """

    i: int
    j: int
    n: int
    m: int

    def __post_init__(self):
        if not (0 <= self.i <= self.n and 0 <= self.j <= self.m):
            raise ValueError(f"divisor side ({self.i},{self.j}) outside totals ({self.n},{self.m})")
        T = self.n + self.m
        if self.i + self.j < 2 or T - self.i - self.j < 2:
            raise ValueError(f"unstable divisor ({self.i},{self.j}) for totals ({self.n},{self.m})")
        ci, cj = _canonical_side(self.i, self.j, self.n, self.m)
        object.__setattr__(self, "i", ci)
        object.__setattr__(self, "j", cj)

    @property
    def complement(self) -> tuple[int, int]:
        return self.n - self.i, self.m - self.j

    def matches(self, i: int, j: int) -> bool:
        """True if the side (i, j) names this divisor."""
        return (i, j) == (self.i, self.j) or (i, j) == self.complement

    def __str__(self):
        return f"D({self.i},{self.j})"


def _blocks_nondecreasing(
    rest_i: int, rest_j: int, k: int, lower: tuple[int, int]
) -> Iterator[tuple[tuple[int, int], ...]]:
    if k == 0:
        if rest_i == 0 and rest_j == 0:
            yield ()
        return
    # every remaining block needs at least one point
    if rest_i + rest_j < k:
        return
    for i in range(lower[0], rest_i + 1):
        j0 = lower[1] if i == lower[0] else 0
        for j in range(j0, rest_j + 1):
            if i + j == 0:
                continue
            for tail in _blocks_nondecreasing(rest_i - i, rest_j - j, k - 1, (i, j)):
                yield ((i, j),) + tail


def enumerate_curve_classes(n: int, m: int) -> list[CurveClassZ3]:
    """All symmetrized one-dimensional strata with totals (n, m)."""
    check_totals(n, m, min_total=3)
    return [
        CurveClassZ3.of(*blocks)
        for blocks in _blocks_nondecreasing(n, m, 4, (0, 0))
    ]


def enumerate_divisor_classes(n: int, m: int) -> list[DivisorClassZ3]:
    check_totals(n, m, min_total=3)
    T = n + m
    seen = {}
    for i in range(n + 1):
        for j in range(m + 1):
            if i + j >= 2 and T - i - j >= 2:
                d = DivisorClassZ3(i, j, n, m)
                seen.setdefault((d.i, d.j), d)
    return [seen[k] for k in sorted(seen)]


def single_block_sides(curve: CurveClassZ3) -> list[tuple[int, int]]:
    """Sides of the non-transverse splittings {X | rest} with |X| >= 2."""
    return [(b.omega_count, b.omegabar_count) for b in curve.blocks if b.size >= 2]


def two_block_sides(curve: CurveClassZ3) -> list[tuple[int, int]]:
    """Sides X u Y of the three transverse splittings {X u Y | rest}."""
    a, *others = curve.blocks
    return [(a.omega_count + b.omega_count, a.omegabar_count + b.omegabar_count) for b in others]


def pair_curve_divisor(curve: CurveClassZ3, divisor: DivisorClassZ3) -> Fraction:
    """Intersection number of a curve class with a symmetrized divisor.

    Each stable block X gives a non-transverse intersection with D_X
    worth -1 (psi on a four-pointed component is a point, psi on a
    three-pointed one vanishes).  Each pairing of blocks gives a
    transverse point of D_{X u Y}.  Every other divisor misses the curve.
    """
    if (curve.n, curve.m) != (divisor.n, divisor.m):
        raise ValueError(
            f"curve totals ({curve.n},{curve.m}) differ from divisor totals ({divisor.n},{divisor.m})"
        )
    total = 0
    total -= sum(divisor.matches(i, j) for i, j in single_block_sides(curve))
    total += sum(divisor.matches(i, j) for i, j in two_block_sides(curve))
    return Fraction(total)
