"""Exact Frobenius numbers of triples via Fourier-Dedekind sums.

Counts solutions of a*m1 + b*m2 + c*m3 = t with an exact rational
quasi-polynomial, locates the Frobenius number by a downward root search,
and reruns the Monte Carlo study of f/sqrt(abc) over random admissible
triples.
"""

__version__ = "0.1.0"

from .numtheory import Triple, gcd, isqrt, pairwise_coprime, representable_by_two
from .dedekind import (
    SigmaTable,
    periodic_part,
    sigma_direct,
    sigma_fast,
    sigma_numeric_check,
    sigma_table,
)
from .counting import count_nonneg_formula, count_oracle, count_pos_formula
from .frobenius import (
    AdmissibilityReport,
    BoundsReport,
    FrobeniusResult,
    bdr_upper,
    bound_from_periodic_bound,
    bounds_report,
    brauer_shockley,
    classify,
    conjecture_upper,
    davison_lower,
    frobenius_search,
    frobenius_sieve,
    johnson_reduce,
    lewin_almost_arithmetic,
    sylvester,
)

__all__ = [
    "Triple", "gcd", "isqrt", "pairwise_coprime", "representable_by_two",
    "SigmaTable", "periodic_part", "sigma_direct", "sigma_fast",
    "sigma_numeric_check", "sigma_table",
    "count_nonneg_formula", "count_oracle", "count_pos_formula",
    "AdmissibilityReport", "BoundsReport", "FrobeniusResult", "bdr_upper",
    "bound_from_periodic_bound", "bounds_report", "brauer_shockley", "classify",
    "conjecture_upper", "davison_lower", "frobenius_search", "frobenius_sieve",
    "johnson_reduce", "lewin_almost_arithmetic", "sylvester",
]
