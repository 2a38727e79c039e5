"""Oracle-equivalence suites behind ``frobnum verify``.

Every suite compares a formula or the root search against the DP count or
the sieve on a complete range of small inputs and keeps the first few
counterexamples.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from . import counting, frobenius
from .numtheory import pairwise_coprime

MAX_GUARD = 200
KEEP = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    failed: int = 0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def fail(self, example):
        self.failed += 1
        if len(self.failures) < KEEP:
            self.failures.append(example)


def coprime_triples(top: int, low: int = 2):
    for a, b, c in itertools.combinations(range(low, top + 1), 3):
        if pairwise_coprime(a, b, c):
            yield a, b, c


def oracle_counts(top: int, parts) -> list[int]:
    """Nonnegative-solution counts for every t in 0..top."""
    ways = [1] + [0] * top
    for p in parts:
        for x in range(p, top + 1):
            ways[x] += ways[x - p]
    return ways


def search_vs_sieve(top: int) -> SuiteResult:
    res = SuiteResult("search-vs-sieve")
    for a, b, c in coprime_triples(top):
        res.checked += 1
        got = frobenius.frobenius_search(a, b, c).g
        want = frobenius.frobenius_sieve([a, b, c])
        if got != want:
            res.fail({"triple": (a, b, c), "search": got, "sieve": want})
    return res


def formula_vs_oracle(top: int) -> SuiteResult:
    """Both counts against DP for t up to f + 2 min(a, b, c)."""
    res = SuiteResult("formula-vs-oracle")
    for a, b, c in coprime_triples(top):
        g = frobenius.frobenius_sieve([a, b, c])
        s = a + b + c
        horizon = g + s + 2 * a
        ways = oracle_counts(horizon, (a, b, c))
        cnt = counting.TripleCounter(a, b, c)
        for t in range(horizon + 1):
            res.checked += 1
            pos_want = ways[t - s] if t >= s else 0
            try:
                got, pos_got = cnt.nonneg(t), cnt.pos(t)
            except counting.FormulaConsistencyError as exc:
                res.fail({"triple": (a, b, c), "t": t, "error": str(exc)})
                break
            if got != ways[t] or pos_got != pos_want:
                res.fail({"triple": (a, b, c), "t": t, "formula": (got, pos_got),
                          "oracle": (ways[t], pos_want)})
                break
    return res


def johnson_vs_sieve(top: int) -> SuiteResult:
    res = SuiteResult("johnson-vs-sieve")
    for a, b, c in itertools.combinations(range(1, top + 1), 3):
        if math.gcd(math.gcd(a, b), c) != 1 or pairwise_coprime(a, b, c):
            continue
        res.checked += 1
        got = frobenius.johnson_reduce(a, b, c)
        want = frobenius.frobenius_sieve([a, b, c])
        if got != want:
            res.fail({"triple": (a, b, c), "johnson": got, "sieve": want})
    return res


def brauer_shockley_vs_sieve(top: int) -> SuiteResult:
    res = SuiteResult("brauer-shockley-vs-sieve")
    for a in range(1, top + 1):
        for b, c in itertools.combinations(range(1, top + 1), 2):
            if a in (b, c) or (b + c) % a or not pairwise_coprime(a, b, c):
                continue
            res.checked += 1
            got = frobenius.brauer_shockley(a, b, c)
            want = frobenius.frobenius_sieve([a, b, c])
            if got != want:
                res.fail({"triple": (a, b, c), "formula": got, "sieve": want})
    return res


def lewin_vs_sieve(top: int = 30, mn: int = 4) -> SuiteResult:
    res = SuiteResult("lewin-vs-sieve")
    for a in range(2, top + 1):
        for m, n in itertools.product(range(1, mn + 1), repeat=2):
            if math.gcd(a, n) != 1:
                continue
            for d in (2, 3):
                if d > a:
                    continue
                seq = [a] + [m * a + k * n for k in range(1, d)]
                res.checked += 1
                got = frobenius.lewin_almost_arithmetic(a, m, n, d)
                want = frobenius.frobenius_sieve(seq)
                extra = {}
                if d == 2:
                    extra["sylvester"] = frobenius.sylvester(a, m * a + n)
                elif d == 3:
                    extra["d3-form"] = frobenius.lewin_three(a, m, n)
                if got != want or any(v != got for v in extra.values()):
                    res.fail({"sequence": tuple(seq), "formula": got, "sieve": want, **extra})
    return res


def run_all(top: int) -> list[SuiteResult]:
    if top > MAX_GUARD:
        raise ValueError(f"--max must be at most {MAX_GUARD}")
    if top < 3:
        raise ValueError("--max must be at least 3")
    return [
        search_vs_sieve(top),
        formula_vs_oracle(top),
        johnson_vs_sieve(top),
        brauer_shockley_vs_sieve(top),
        lewin_vs_sieve(min(top, 30)),
    ]
