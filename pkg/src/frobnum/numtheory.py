"""Integer primitives shared by the rest of the package.

Rationals are plain :class:`fractions.Fraction` objects: they are always
stored in lowest terms with a positive denominator, which is all the
counting formulas need.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

Rational = Fraction


def gcd(x: int, y: int) -> int:
    return math.gcd(x, y)


def isqrt(n: int) -> int:
    """Largest k with k*k <= n, computed without floating point."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def pairwise_coprime(a: int, b: int, c: int) -> bool:
    return math.gcd(a, b) == 1 and math.gcd(a, c) == 1 and math.gcd(b, c) == 1


def representable_by_two(target: int, a: int, b: int) -> bool:
    """True iff target = m1*a + m2*b for some m1, m2 >= 0."""
    if math.gcd(a, b) != 1:
        raise ValueError(f"gcd({a}, {b}) != 1")
    if target < 0:
        return False
    for m2 in range(target // b + 1):
        if (target - m2 * b) % a == 0:
            return True
    return False


@dataclass(frozen=True)
class Triple:
    """Three positive parts. Coprimality is computed once at construction."""

    a: int
    b: int
    c: int
    coprime: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise ValueError(f"parts must be positive: {(self.a, self.b, self.c)}")
        object.__setattr__(self, "coprime", pairwise_coprime(self.a, self.b, self.c))

    @classmethod
    def sorted(cls, a: int, b: int, c: int) -> "Triple":
        return cls(*sorted((a, b, c)))

    @property
    def sorted_ascending(self) -> bool:
        return self.a <= self.b <= self.c

    @property
    def parts(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def product(self) -> int:
        return self.a * self.b * self.c

    def __iter__(self):
        return iter(self.parts)
