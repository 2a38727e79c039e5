"""Denumerants of a triple: exact quasi-polynomial counts and a DP oracle.

For pairwise coprime a, b, c and t >= 0 the number of nonnegative
solutions of a*m1 + b*m2 + c*m3 = t is

    N_t = t^2/(2abc) + t/2 (1/ab + 1/ac + 1/bc)
          + (3/a + 3/b + 3/c + a/bc + b/ac + c/ab)/12
          + sigma_{-t}(b, c; a) + sigma_{-t}(a, c; b) + sigma_{-t}(a, b; c)

and the number of strictly positive solutions (t >= 1) is the same
expression with t -> -t, i.e. the linear term negated and sigma_{+t}.
Both are evaluated on integers scaled by 12*(abc)^2.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .dedekind import SigmaTable, sigma_table


class FormulaConsistencyError(ArithmeticError):
    """The rational count did not reduce to a nonnegative integer."""

    def __init__(self, msg: str, triple: tuple[int, int, int] | None = None, t: int | None = None):
        super().__init__(msg)
        self.triple = triple
        self.t = t


class TripleCounter:
    """Counts for one fixed pairwise coprime triple.

    The three sigma tables are built once; each count is then a handful
    of integer operations.
    """

    def __init__(self, a: int, b: int, c: int):
        if min(a, b, c) < 1:
            raise ValueError(f"parts must be positive: {(a, b, c)}")
        if not (math.gcd(a, b) == math.gcd(a, c) == math.gcd(b, c) == 1):
            raise ValueError(f"({a}, {b}, {c}) is not pairwise coprime")
        self.a, self.b, self.c = a, b, c
        self.tables: tuple[SigmaTable, SigmaTable, SigmaTable] = (
            sigma_table(b, c, a),
            sigma_table(a, c, b),
            sigma_table(a, b, c),
        )
        p = a * b * c
        self.scale = 12 * p * p
        self._quad = 6 * p
        self._lin = 6 * p * (a + b + c)
        self._const = p * (3 * (a * b + b * c + a * c) + a * a + b * b + c * c)
        # table numerators are over 4*m^2; bring each to scale
        self._weights = (3 * (b * c) ** 2, 3 * (a * c) ** 2, 3 * (a * b) ** 2)

    def _reduce(self, scaled: int, t: int) -> int:
        n, r = divmod(scaled, self.scale)
        if r or n < 0:
            raise FormulaConsistencyError(
                f"count for t={t} on {(self.a, self.b, self.c)} is {scaled}/{self.scale}",
                (self.a, self.b, self.c), t,
            )
        return n

    def _periodic(self, t: int) -> int:
        ta, tb, tc = self.tables
        wa, wb, wc = self._weights
        return (
            wa * ta.numerators[t % self.a]
            + wb * tb.numerators[t % self.b]
            + wc * tc.numerators[t % self.c]
        )

    def nonneg(self, t: int) -> int:
        if t < 0:
            return 0
        scaled = self._quad * t * t + self._lin * t + self._const + self._periodic(-t)
        return self._reduce(scaled, t)

    def pos(self, t: int) -> int:
        if t <= 0:
            # the quasi-polynomial is only valid from t = 1 on; at 0 it gives N_0 = 1
            return 0
        scaled = self._quad * t * t - self._lin * t + self._const + self._periodic(t)
        return self._reduce(scaled, t)


@lru_cache(maxsize=64)
def counter(a: int, b: int, c: int) -> TripleCounter:
    return TripleCounter(a, b, c)


def count_nonneg_formula(t: int, a: int, b: int, c: int) -> int:
    if t < 0:
        raise ValueError("t must be nonnegative")
    return counter(a, b, c).nonneg(t)


def count_pos_formula(t: int, a: int, b: int, c: int) -> int:
    if t < 0:
        raise ValueError("t must be nonnegative")
    return counter(a, b, c).pos(t)


def count_oracle(t: int, parts, positive: bool = False) -> int:
    """Number of solutions of sum(m_k * parts[k]) = t by coin-change DP.

    With ``positive`` every m_k must be at least 1; this is the plain count
    at t - sum(parts).
    """
    parts = list(parts)
    if not parts or min(parts) < 1:
        raise ValueError("parts must be a nonempty list of positive integers")
    if positive:
        t -= sum(parts)
    if t < 0:
        return 0
    ways = [1] + [0] * t
    for p in parts:
        for x in range(p, t + 1):
            ways[x] += ways[x - p]
    return ways[t]
