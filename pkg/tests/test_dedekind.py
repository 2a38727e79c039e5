from fractions import Fraction
import math
import random

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from frobnum.dedekind import (
    floor_sums, periodic_part, sigma_direct, sigma_fast, sigma_numeric,
    sigma_numeric_check, sigma_table,
)
from conftest import dp_counts


def polynomial_part(t, a, b, c):
    return (Fraction(t * t, 2 * a * b * c)
            + Fraction(t, 2) * (Fraction(1, a * b) + Fraction(1, a * c) + Fraction(1, b * c))
            + Fraction(1, 12) * (Fraction(3, a) + Fraction(3, b) + Fraction(3, c)
                                 + Fraction(a, b * c) + Fraction(b, a * c) + Fraction(c, a * b)))


def test_empty_sum_is_zero():
    for t in range(-3, 4):
        assert sigma_direct(t, 5, 9, 1) == 0
        assert sigma_fast(t, 5, 9, 1) == 0
    assert sigma_table(5, 9, 1).values == [0]


def test_single_root_case():
    # lam = -1: (1/2) * 1 / ((-2)(-2))
    assert sigma_direct(0, 1, 1, 2) == Fraction(1, 8)
    assert sigma_fast(0, 1, 1, 2) == Fraction(1, 8)
    assert sigma_table(1, 1, 2).values == [Fraction(1, 8), Fraction(-1, 8)]


def test_sigma_5_3_4_7_against_count():
    # isolate the c = 7 term of the count formula at t = 2 (so -t = 5 mod 7),
    # using high-precision root-of-unity sums for the other two terms
    want = sigma_direct(5, 3, 4, 7)
    with mpmath.workdps(40):
        for t in (2, 9, 16, 23):
            n = dp_counts(t, (3, 4, 7))[t]
            rest = sigma_numeric(-t, 4, 7, 3, 40) + sigma_numeric(-t, 3, 7, 4, 40)
            v = n - polynomial_part(t, 3, 4, 7) - rest
            assert abs(v - mpmath.mpf(want.numerator) / want.denominator) < mpmath.mpf(10) ** -30
    assert want == Fraction(-2, 7)


def test_rejects_shared_factor():
    with pytest.raises(ValueError):
        sigma_direct(0, 2, 3, 4)
    with pytest.raises(ValueError):
        sigma_fast(0, 3, 6, 9)
    with pytest.raises(ValueError):
        sigma_table(3, 5, 0)


def test_floor_sums_brute():
    rng = random.Random(5)
    for _ in range(2000):
        p, q, m, n = rng.randrange(60), rng.randrange(60), rng.randrange(1, 60), rng.randrange(-1, 60)
        ks = [(p * i + q) // m for i in range(n + 1)]
        assert floor_sums(p, q, m, n) == (sum(ks), sum(i * k for i, k in enumerate(ks)), sum(k * k for k in ks))


def test_fast_matches_direct_small_moduli():
    for c in range(1, 26):
        for a in range(1, c + 1):
            if math.gcd(a, c) != 1:
                continue
            for b in range(a, c + 1):
                if math.gcd(b, c) != 1:
                    continue
                for t in range(c):
                    assert sigma_fast(t, a, b, c) == sigma_direct(t, a, b, c)


def test_table_matches_direct():
    for a, b, c in [(3, 4, 7), (7, 13, 30), (2, 9, 25), (11, 5, 1), (1, 1, 2)]:
        table = sigma_table(a, b, c)
        assert len(table) == c
        for r in range(c):
            assert table[r] == sigma_direct(r, a, b, c)
        assert table[-1] == table[c - 1]


@settings(max_examples=200)
@given(st.integers(-500, 500), st.integers(1, 400), st.integers(1, 400), st.integers(1, 400))
def test_symmetry_and_periodicity(t, a, b, c):
    if math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
        return
    s = sigma_fast(t, a, b, c)
    assert isinstance(s, Fraction)
    assert s == sigma_fast(t, b, a, c)
    assert s == sigma_fast(t + c, a, b, c)
    assert s == sigma_fast(t, a + c, b, c)


def test_periodic_part():
    for t in range(5):
        assert periodic_part(t, 1, 1, 1) == 0
    for t in (0, 3, 17, 50):
        assert periodic_part(t, 3, 4, 7) == periodic_part(t + 84, 3, 4, 7)
    ways = dp_counts(83, (3, 4, 7))
    for t in range(84):
        assert periodic_part(t, 3, 4, 7) == polynomial_part(t, 3, 4, 7) - ways[t]
    with pytest.raises(ValueError):
        periodic_part(0, 2, 4, 7)


def test_numeric_check():
    assert sigma_numeric_check(0, 1, 1, 2, 30) < 1e-20
    assert sigma_numeric_check(5, 3, 4, 7, 30) < 1e-20
    assert sigma_numeric_check(3, 2, 5, 1, 30) == 0


def test_numeric_imaginary_part_cancels():
    with mpmath.workdps(30):
        v = sigma_numeric(11, 7, 13, 30, 30)
        assert abs(v.imag) < 1e-25
