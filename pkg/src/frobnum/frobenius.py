"""Frobenius numbers: root search, sieve oracle, closed forms, bounds.

Conventions: g is the largest integer that is not a nonnegative
combination of the parts; f = g + sum(parts) is the largest integer that
is not a strictly positive combination. When some part is 1 every integer
is representable and g = -1.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Optional

import numpy as np

from .counting import TripleCounter
from .numtheory import isqrt, pairwise_coprime, representable_by_two

METHODS = ("search", "sieve", "sylvester", "johnson", "brauer-shockley", "lewin")


@dataclass(frozen=True)
class FrobeniusResult:
    parts: tuple[int, ...]
    g: int
    method: str
    evaluations: int = 0

    @property
    def f(self) -> int:
        return self.g + sum(self.parts)


def frobenius_search(a: int, b: int, c: int) -> FrobeniusResult:
    """Largest root of the positive-solution count, searched downward.

    Start at mb = isqrt(3abc) + delta with delta = min(a, b, c) and walk t
    down until the count vanishes; that t is the candidate f. If fewer than
    delta positive counts sit above it, raise mb by delta and walk again.
    Otherwise f + 1 .. f + delta are all representable and so is every
    larger integer.
    """
    if min(a, b, c) < 1:
        raise ValueError(f"parts must be positive: {(a, b, c)}")
    if not pairwise_coprime(a, b, c):
        raise ValueError(f"({a}, {b}, {c}) is not pairwise coprime")
    if min(a, b, c) == 1:
        raise ValueError(f"degenerate triple {(a, b, c)}: a part equals 1, g = -1")
    counts = TripleCounter(a, b, c)
    delta = min(a, b, c)
    mb = isqrt(3 * a * b * c) + delta
    evaluations = 0
    while True:
        t = mb
        while True:
            evaluations += 1
            if counts.pos(t) == 0:
                break
            t -= 1
        f = t
        if mb - f < delta:
            mb += delta
            continue
        break
    return FrobeniusResult((a, b, c), f - a - b - c, "search", evaluations)


def _sieve_cap(parts: list[int]) -> int:
    # Schur: g <= (min - 1)(max - 1) - 1 whenever gcd(parts) = 1
    return (min(parts) - 1) * (max(parts) - 1)


def representable_mask(parts, cap: int) -> np.ndarray:
    """Boolean array, entry t True iff t is a nonnegative combination."""
    rep = np.zeros(cap + 1, dtype=bool)
    rep[0] = True
    for p in parts:
        # block k only reads block k-1, which is already final for this part
        for start in range(p, cap + 1, p):
            stop = min(start + p, cap + 1)
            rep[start:stop] |= rep[start - p:stop - p]
    return rep


def frobenius_sieve(parts) -> int:
    """Frobenius number by marking every representable integer up to a
    proven cap and taking the largest gap."""
    parts = [int(p) for p in parts]
    if not parts or min(parts) < 1:
        raise ValueError("parts must be a nonempty list of positive integers")
    if reduce(math.gcd, parts) != 1:
        raise ValueError(f"gcd{tuple(parts)} > 1: Frobenius number undefined")
    if 1 in parts:
        return -1
    rep = representable_mask(parts, _sieve_cap(parts))
    gaps = np.flatnonzero(~rep)
    return int(gaps[-1]) if gaps.size else -1


def sylvester(a: int, b: int) -> int:
    if a < 1 or b < 1 or math.gcd(a, b) != 1:
        raise ValueError(f"sylvester needs coprime positive parts, got {(a, b)}")
    if a == 1 or b == 1:
        return -1
    return a * b - a - b


def johnson_reduce(a: int, b: int, c: int) -> int:
    """g(a, b, c) for gcd(a, b, c) = 1 by dividing out shared pair factors:
    g(a, b, c) = m g(a/m, b/m, c) + (m - 1) c with m = gcd(a, b)."""
    if min(a, b, c) < 1:
        raise ValueError(f"parts must be positive: {(a, b, c)}")
    if math.gcd(math.gcd(a, b), c) != 1:
        raise ValueError(f"gcd{(a, b, c)} > 1: Frobenius number undefined")
    return _johnson(a, b, c)


def _johnson(a: int, b: int, c: int) -> int:
    for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
        m = math.gcd(x, y)
        if m > 1:
            return m * _johnson(x // m, y // m, z) + (m - 1) * z
    if 1 in (a, b, c):
        return -1
    for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
        if representable_by_two(x, y, z):
            return sylvester(y, z)
    return frobenius_search(a, b, c).g


def brauer_shockley(a: int, b: int, c: int) -> int:
    """Closed form for pairwise coprime triples with a | (b + c)."""
    if (b + c) % a:
        raise ValueError(f"{a} does not divide {b} + {c}")
    if not pairwise_coprime(a, b, c):
        raise ValueError(f"({a}, {b}, {c}) is not pairwise coprime")
    return max(b * (a * c // (b + c)), c * (a * b // (b + c))) - a


def lewin_almost_arithmetic(a: int, m: int, n: int, d: int = 3) -> int:
    """g(a, ma+n, ..., ma+(d-1)n) for m, n > 0, gcd(a, n) = 1, 2 <= d <= a."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1")
    if not 2 <= d <= a:
        raise ValueError(f"need 2 <= d <= a, got d={d}, a={a}")
    return (m * ((a - 2) // (d - 1)) + m - 1) * a + (a - 1) * n


def lewin_three(a: int, m: int, n: int) -> int:
    """The d = 3 form (m floor(a/2) - 1) a + (a - 1) n."""
    return (m * (a // 2) - 1) * a + (a - 1) * n


# -- admissibility ----------------------------------------------------------

ADMISSIBLE = "admissible"
NOT_COPRIME = "not-pairwise-coprime"
MEMBER_REPRESENTABLE = "member-representable"
ALMOST_ARITHMETIC = "almost-arithmetic"
DIVIDES_SUM = "divides-sum"


@dataclass(frozen=True)
class AdmissibilityReport:
    verdict: str
    witness: Optional[dict] = field(default=None)

    @property
    def admissible(self) -> bool:
        return self.verdict == ADMISSIBLE


def _two_combination(target: int, x: int, y: int) -> tuple[int, int]:
    for m2 in range(target // y + 1):
        rest = target - m2 * y
        if rest % x == 0:
            return rest // x, m2
    raise ValueError(f"{target} is not representable by {x} and {y}")


def almost_arithmetic_witness(a: int, b: int, c: int) -> Optional[dict]:
    """First ordering (a', b', c') = (a', m a' + n, m a' + 2n) with
    m, n > 0 and gcd(a', n) = 1, or None."""
    for x, y, z in itertools.permutations((a, b, c)):
        n = z - y
        step = 2 * y - z
        if n > 0 and step > 0 and step % x == 0 and math.gcd(x, n) == 1:
            return {"order": (x, y, z), "a": x, "m": step // x, "n": n}
    return None


def classify(a: int, b: int, c: int) -> AdmissibilityReport:
    """Check the exclusion families in a fixed order; the first hit wins.

    Order: pairwise coprimality, a member representable by the other two,
    almost-arithmetic ordering, a member dividing the sum of the other two.
    Almost-arithmetic runs before divides-sum because every m = 1 sequence
    also has b' | a' + c'; the more specific family names the verdict.
    """
    if min(a, b, c) < 1:
        raise ValueError(f"parts must be positive: {(a, b, c)}")
    for x, y in ((a, b), (a, c), (b, c)):
        if math.gcd(x, y) > 1:
            return AdmissibilityReport(NOT_COPRIME, {"pair": (x, y), "gcd": math.gcd(x, y)})
    for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
        if representable_by_two(x, y, z):
            m1, m2 = _two_combination(x, y, z)
            return AdmissibilityReport(
                MEMBER_REPRESENTABLE, {"member": x, "by": (y, z), "combination": (m1, m2)}
            )
    aa = almost_arithmetic_witness(a, b, c)
    if aa is not None:
        return AdmissibilityReport(ALMOST_ARITHMETIC, aa)
    for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
        if (y + z) % x == 0:
            return AdmissibilityReport(DIVIDES_SUM, {"divisor": x, "sum": (y, z)})
    return AdmissibilityReport(ADMISSIBLE)


# -- bounds -----------------------------------------------------------------

def davison_lower(a: int, b: int, c: int) -> float:
    return math.sqrt(3 * a * b * c) - a - b - c


def davison_holds(g: int, a: int, b: int, c: int) -> bool:
    """g >= sqrt(3abc) - a - b - c, decided in integers."""
    f = g + a + b + c
    return f >= 0 and f * f >= 3 * a * b * c


def bdr_upper(a: int, b: int, c: int) -> float:
    s = a + b + c
    return 0.5 * (math.sqrt(a * b * c * s) - s)


def bdr_holds(g: int, a: int, b: int, c: int) -> bool:
    """g <= (sqrt(abc(a+b+c)) - a - b - c) / 2, decided in integers."""
    s = a + b + c
    lhs = 2 * g + s
    return lhs <= 0 or lhs * lhs <= a * b * c * s


def conjecture_upper(a: int, b: int, c: int) -> float:
    return (a * b * c) ** 0.625 - a - b - c


def conjecture_holds(g: int, a: int, b: int, c: int) -> bool:
    """g <= (abc)^(5/8) - a - b - c, i.e. f^8 <= (abc)^5 for f >= 0."""
    f = g + a + b + c
    return f <= 0 or f ** 8 <= (a * b * c) ** 5


def bound_from_periodic_bound(a: int, b: int, c: int, bound) -> float:
    """Upper bound on g implied by P_t <= bound for all t."""
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("periodic-part bound must be nonnegative")
    inner = 2 * bound * a * b * c + Fraction(a * a + b * b + c * c, 12)
    return math.sqrt(inner) - (a + b + c) / 2


@dataclass(frozen=True)
class BoundsReport:
    parts: tuple[int, int, int]
    g: int
    davison_lower: float
    bdr_upper: float
    conjecture_upper: float
    lower_holds: bool
    bdr_holds: bool
    conjecture_holds: bool


def bounds_report(a: int, b: int, c: int, g: Optional[int] = None) -> BoundsReport:
    if g is None:
        g = johnson_reduce(a, b, c)
    return BoundsReport(
        (a, b, c), g,
        davison_lower(a, b, c), bdr_upper(a, b, c), conjecture_upper(a, b, c),
        davison_holds(g, a, b, c), bdr_holds(g, a, b, c), conjecture_holds(g, a, b, c),
    )
