"""Fourier-Dedekind sums

    sigma_t(a, b; c) = 1/c * sum over c-th roots of unity lam != 1 of
                       lam**t / ((lam**a - 1) * (lam**b - 1))

evaluated exactly. For lam**c == 1, lam != 1 one has
1/(lam - 1) = (1/c) * sum_{j<c} j * lam**j, and summing the product of two
such expansions over all roots leaves only the exponents divisible by c.
With u = -b^{-1} mod c this gives the integer form

    sigma_t = (4*S(t) - c*(c-1)**2) / (4*c**2),
    S(t)    = sum_{i<c} i * ((u*a*i + u*t) mod c),

which is what every routine here computes. ``sigma_fast`` evaluates S(t)
with a floor-sum recursion that reduces (p, c) like the Euclidean
algorithm, so its cost is logarithmic in c.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath


def _check(a: int, b: int, c: int) -> None:
    if c < 1:
        raise ValueError(f"modulus must be positive, got {c}")
    if math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
        raise ValueError(f"sigma(a={a}, b={b}; c={c}) needs gcd(a,c) = gcd(b,c) = 1")


def _multiplier(b: int, c: int) -> int:
    return -pow(b, -1, c) % c


def _from_s(s: int, c: int) -> Fraction:
    return Fraction(4 * s - c * (c - 1) ** 2, 4 * c * c)


def sigma_direct(t: int, a: int, b: int, c: int) -> Fraction:
    """Exact value by an O(c) pass over the residues."""
    _check(a, b, c)
    if c == 1:
        return Fraction(0)
    u = _multiplier(b, c)
    s = sum(i * ((u * (t + a * i)) % c) for i in range(c))
    return _from_s(s, c)


def floor_sums(p: int, q: int, m: int, n: int) -> tuple[int, int, int]:
    """Return (F, G, H), sums over i = 0..n of k_i, i*k_i and k_i**2,
    where k_i = floor((p*i + q) / m). Requires p, q >= 0 and m >= 1."""
    if n < 0:
        return 0, 0, 0
    s1 = n * (n + 1) // 2
    if p == 0:
        k = q // m
        return (n + 1) * k, k * s1, (n + 1) * k * k
    if p >= m or q >= m:
        hi, lo = divmod(p, m)
        qh, ql = divmod(q, m)
        f, g, h = floor_sums(lo, ql, m, n)
        s2 = n * (n + 1) * (2 * n + 1) // 6
        return (
            f + hi * s1 + qh * (n + 1),
            g + hi * s2 + qh * s1,
            h + hi * hi * s2 + qh * qh * (n + 1) + 2 * hi * qh * s1 + 2 * qh * f + 2 * hi * g,
        )
    top = (p * n + q) // m
    if top == 0:
        return 0, 0, 0
    f, g, h = floor_sums(m, m - q - 1, p, top - 1)
    big_f = n * top - f
    big_g = (top * n * (n + 1) - h - f) // 2
    big_h = n * top * (top + 1) - 2 * g - 2 * f - big_f
    return big_f, big_g, big_h


def sigma_fast(t: int, a: int, b: int, c: int) -> Fraction:
    """Same value as :func:`sigma_direct` in O(log c) arithmetic steps."""
    _check(a, b, c)
    if c == 1:
        return Fraction(0)
    u = _multiplier(b, c)
    p = u * a % c
    q = u * t % c
    n = c - 1
    # (p*i + q) mod c = p*i + q - c*floor((p*i + q)/c)
    _, g, _ = floor_sums(p, q, c, n)
    s = p * n * (n + 1) * (2 * n + 1) // 6 + q * n * (n + 1) // 2 - c * g
    return _from_s(s, c)


@dataclass(frozen=True)
class SigmaTable:
    """All residues of sigma_t(a, b; c) for fixed (a, b, c).

    ``numerators[r]`` holds 4*c**2 * sigma_r as an integer; the counting
    code works on these directly to stay out of Fraction arithmetic.
    """

    a: int
    b: int
    modulus: int
    numerators: tuple[int, ...]

    @property
    def denominator(self) -> int:
        return 4 * self.modulus * self.modulus

    def __len__(self) -> int:
        return self.modulus

    def __getitem__(self, t: int) -> Fraction:
        return Fraction(self.numerators[t % self.modulus], self.denominator)

    @property
    def values(self) -> list[Fraction]:
        return [self[r] for r in range(self.modulus)]


def sigma_table(a: int, b: int, c: int) -> SigmaTable:
    """Tabulate sigma over one period in O(c) total work.

    With p = u*a mod c, S as a function of q = u*t mod c steps by
    c*(c-1)/2 - c*i* when q -> q+1, where i* is the index whose residue
    wraps from c-1 to 0.
    """
    _check(a, b, c)
    if c == 1:
        return SigmaTable(a, b, 1, (0,))
    u = _multiplier(b, c)
    p = u * a % c
    p_inv = pow(p, -1, c)
    half = c * (c - 1) // 2
    by_q = [0] * c
    s = sum(i * (p * i % c) for i in range(c))
    for q in range(c):
        by_q[q] = s
        s += half - c * ((c - 1 - q) * p_inv % c)
    offset = c * (c - 1) ** 2
    nums = tuple(4 * by_q[u * r % c] - offset for r in range(c))
    return SigmaTable(a, b, c, nums)


def periodic_part(t: int, a: int, b: int, c: int) -> Fraction:
    """Periodic part P_t(a, b, c): N_t = polynomial part - P_t."""
    if not (math.gcd(a, b) == math.gcd(a, c) == math.gcd(b, c) == 1):
        raise ValueError(f"({a}, {b}, {c}) is not pairwise coprime")
    return -(sigma_fast(-t, b, c, a) + sigma_fast(-t, a, c, b) + sigma_fast(-t, a, b, c))


def sigma_numeric(t: int, a: int, b: int, c: int, digits: int = 30) -> mpmath.mpc:
    """The defining root-of-unity sum in mpmath complex arithmetic."""
    with mpmath.workdps(digits):
        total = mpmath.mpc(0)
        for k in range(1, c):
            lam = mpmath.expjpi(mpmath.mpf(2 * k) / c)
            total += lam ** t / ((lam ** a - 1) * (lam ** b - 1))
        return total / c


def sigma_numeric_check(t: int, a: int, b: int, c: int, digits: int = 30) -> float:
    """|numeric - exact| for one sigma value, as a float."""
    exact = sigma_fast(t, a, b, c)
    with mpmath.workdps(digits):
        numeric = sigma_numeric(t, a, b, c, digits)
        diff = abs(numeric - mpmath.mpf(exact.numerator) / exact.denominator)
        return float(diff)
