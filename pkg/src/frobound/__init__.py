"""Frobenius numbers, Dedekind-Rademacher sums, and upper bounds for g(a,b,c)."""

from .arith import (
    Rational,
    bernoulli_psi2,
    gcd,
    least_nonneg_residue,
    mod_inverse,
    sawtooth_st,
    sawtooth_sts,
)
from .dedekind import (
    cauchy_schwarz_bound,
    rademacher_sum_fast,
    rademacher_sum_naive,
    reciprocity_rhs_Q,
    sigma_naive,
    sigma_via_rademacher,
)

__all__ = [
    "Rational",
    "bernoulli_psi2",
    "cauchy_schwarz_bound",
    "gcd",
    "least_nonneg_residue",
    "mod_inverse",
    "rademacher_sum_fast",
    "rademacher_sum_naive",
    "reciprocity_rhs_Q",
    "sawtooth_st",
    "sawtooth_sts",
    "sigma_naive",
    "sigma_via_rademacher",
]
