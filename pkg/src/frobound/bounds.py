"""Upper and lower bounds for the Frobenius number g(a,b,c).

Three classical upper bounds (Erdos-Graham, Selmer, Vitek), Davison's lower
bound, the square-root bound that falls out of the classical Dedekind-sum
estimate, and the new machinery: t-independent lower bounds for the
Fourier-Dedekind sums sigma_t obtained from the reciprocity law (a closed
three-case Proposition and an N-iteration refinement Algorithm), combined
through the quadratic formula into an upper bound for g.

Square roots are the only inexact step anywhere.  Every radicand is exact,
and each root is rounded in the direction that keeps the enclosing bound
one-sided: down when it feeds a lower bound for sigma_t, up when it feeds
an upper bound for g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .arith import float_down, float_up, mod_inverse, sqrt_lower, sqrt_upper
from .dedekind import cauchy_schwarz_bound
from .frobenius import Triple, _normalize_parts


class NegativityViolation(ArithmeticError):
    """The combined sigma lower bounds summed to >= 0; the new upper bound
    would be meaningless, so this is surfaced loudly instead of used."""


def bound_erdos_graham(parts) -> int:
    """2 a_d floor(a_1 / d) - a_1."""
    vals = _normalize_parts(parts)
    d = len(vals)
    return 2 * vals[-1] * (vals[0] // d) - vals[0]


def bound_selmer(parts) -> int:
    """2 a_{d-1} floor(a_d / d) - a_d."""
    vals = _normalize_parts(parts)
    d = len(vals)
    return 2 * vals[-2] * (vals[-1] // d) - vals[-1]


def bound_vitek(parts) -> int:
    """floor((a_2 - 1)(a_d - 2) / 2) - 1."""
    vals = _normalize_parts(parts)
    return (vals[1] - 1) * (vals[-1] - 2) // 2 - 1


def bound_known_combined(t: Triple) -> int:
    """Minimum of the three classical upper bounds, on the g scale."""
    parts = (t.a, t.b, t.c)
    return min(bound_erdos_graham(parts), bound_selmer(parts), bound_vitek(parts))


def bound_davison_lower(t: Triple) -> float:
    """sqrt(3abc) - a - b - c, rounded down (it is a lower bound for g)."""
    return float_down(sqrt_lower(3 * t.product) - t.sum)


def bound_bdr_sqrt(t: Triple) -> float:
    """(sqrt(abc(a+b+c)) - a - b - c) / 2, rounded up (an upper bound for g)."""
    return float_up((sqrt_upper(t.product * t.sum) - t.sum) / 2)


def q_low(c1: int, c: int) -> Fraction:
    """Lower bound for Q(c1, c; x, 0): -1/4 + c1/(12c) + 1/(12 c1 c) - c/(24 c1)."""
    if c1 < 1 or c < 1:
        raise ValueError(f"arguments must be positive, got ({c1}, {c})")
    return Fraction(-1, 4) + Fraction(c1, 12 * c) + Fraction(1, 12 * c1 * c) - Fraction(c, 24 * c1)


def q_up(c2: int, c1: int) -> Fraction:
    """Upper bound for Q(c2, c1; 0, y): c2/(12 c1) + 1/(12 c2 c1) + c1/(12 c2)."""
    if c2 < 1 or c1 < 1:
        raise ValueError(f"arguments must be positive, got ({c2}, {c1})")
    return Fraction(c2, 12 * c1) + Fraction(1, 12 * c2 * c1) + Fraction(c1, 12 * c2)


class SigmaCase(Enum):
    C1_IS_1 = "c1=1"
    C2_IS_1 = "c2=1"
    GENERAL = "general"
    ALGORITHM = "algorithm"


@dataclass(frozen=True)
class SigmaLowerBound:
    """A t-independent lower bound for sigma_t(a,b;c) with its derivation trace.

    value_exact is a Fraction and already one-sided: where a square root
    enters, it has been replaced by a rational upper bound, so value_exact
    <= sigma_t for every integer t whenever the derivation is sound.
    c2 is 0 on paths where it is never consulted (c1 = 1, or the degenerate
    modulus c = 1).
    """

    value_exact: Fraction
    case: SigmaCase
    c1: int
    c2: int
    iterations_used: int

    @property
    def value(self) -> float:
        return float_down(self.value_exact)


def _cs_sqrt_upper(c2: int) -> Fraction:
    f1, f2 = cauchy_schwarz_bound(c2)
    return sqrt_upper(f1 * f2)


def _first_residue(a: int, b: int, c: int) -> int:
    # least nonnegative residue of -a^{-1} b mod c; validates coprimality
    ainv = mod_inverse(a, c)
    mod_inverse(b, c)  # b must be invertible mod c as well
    return (-ainv * b) % c


def sigma_lower_proposition(a: int, b: int, c: int) -> SigmaLowerBound:
    """Closed-form lower bound for sigma_t(a,b;c), valid for every t.

    Case split on c1 = (-a^{-1} b) mod c and c2 = c mod c1; the general case
    carries a Cauchy-Schwarz square root, taken here as a rational upper
    bound so the overall value stays below the true bound.
    """
    if c == 1:
        # sigma_t(a,b;1) == 1/4 identically; keep the API total
        return SigmaLowerBound(Fraction(1, 4), SigmaCase.C1_IS_1, 0, 0, 1)
    c1 = _first_residue(a, b, c)
    if c1 == 1:
        value = Fraction(-c, 24) + Fraction(1, 6 * c) - Fraction(3, 4)
        return SigmaLowerBound(value, SigmaCase.C1_IS_1, c1, 0, 1)
    c2 = c % c1
    if c2 == 1:
        value = (
            Fraction(c1, 12 * c)
            + Fraction(1, 12 * c1 * c)
            - Fraction(c, 24 * c1)
            - Fraction(1, 6 * c1)
            - Fraction(c1, 12)
            - Fraction(3, 4)
        )
        return SigmaLowerBound(value, SigmaCase.C2_IS_1, c1, c2, 1)
    value = q_low(c1, c) - q_up(c2, c1) - _cs_sqrt_upper(c2) - Fraction(1, 2)
    return SigmaLowerBound(value, SigmaCase.GENERAL, c1, c2, 1)


def sigma_lower_algorithm(
    a: int, b: int, c: int, iterations: int, *, literal_postloop: bool = False
) -> SigmaLowerBound:
    """N-iteration refinement of the Proposition bound for sigma_t(a,b;c).

    Per iteration: c2 := c mod c1; add Q_low(c1,c); unless c1 = 1 also
    subtract Q_up(c2,c1); stop on c1 = 1, c2 = 1, or the iteration budget,
    otherwise descend with c := c2, c1 := c1 mod c2.  If the loop ends in
    the general case, subtract the Cauchy-Schwarz term for the final c2;
    always subtract the final 1/2.

    literal_postloop selects the source pseudocode's post-loop guard
    (c1 > 1 and c2 > 2) instead of the case-(iii)-consistent c2 > 1; the
    two are value-identical because the Cauchy-Schwarz radicand vanishes
    at c2 = 2.
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    if c == 1:
        return SigmaLowerBound(Fraction(1, 4), SigmaCase.ALGORITHM, 0, 0, 1)
    c1 = _first_residue(a, b, c)
    total = Fraction(0)
    n = 1
    while True:
        c2 = c % c1
        total += q_low(c1, c)
        if c1 != 1:
            total -= q_up(c2, c1)
        if c1 == 1 or c2 == 1 or n == iterations:
            break
        c, c1 = c2, c1 % c2
        n += 1
    c2_threshold = 2 if literal_postloop else 1
    if c1 > 1 and c2 > c2_threshold:
        total -= _cs_sqrt_upper(c2)
    total -= Fraction(1, 2)
    return SigmaLowerBound(total, SigmaCase.ALGORITHM, c1, c2, n)


@dataclass(frozen=True)
class ArrangementBound:
    """Proposition and Algorithm bounds for one cyclic sigma arrangement,
    plus their combination actually fed into the Theorem."""

    proposition: SigmaLowerBound
    algorithm: SigmaLowerBound
    combined_exact: Fraction


def _combine(prop: SigmaLowerBound, algo: SigmaLowerBound, combine: str) -> Fraction:
    if combine == "min":
        return min(prop.value_exact, algo.value_exact)
    if combine == "max":
        return max(prop.value_exact, algo.value_exact)
    raise ValueError(f"combine must be 'min' or 'max', got {combine!r}")


def _arrangement(a: int, b: int, c: int, iterations: int, combine: str) -> ArrangementBound:
    prop = sigma_lower_proposition(a, b, c)
    algo = sigma_lower_algorithm(a, b, c, iterations)
    return ArrangementBound(prop, algo, _combine(prop, algo, combine))


def new_upper_bound_exact(
    t: Triple, iterations: int = 2, combine: str = "min"
) -> tuple[Fraction, tuple[ArrangementBound, ArrangementBound, ArrangementBound]]:
    """Exact-rational upper bound for g(a,b,c) from the sigma lower bounds.

    alpha, beta, gamma bound sigma_t(b,c;a), sigma_t(c,a;b), sigma_t(a,b;c);
    the returned Fraction is sqrt-rounded upward, so g <= value holds
    whenever the sigma bounds are sound.  Raises NegativityViolation if
    alpha + beta + gamma fails to be negative.
    """
    a, b, c = t.a, t.b, t.c
    alpha = _arrangement(b, c, a, iterations, combine)
    beta = _arrangement(c, a, b, iterations, combine)
    gamma = _arrangement(a, b, c, iterations, combine)
    total = alpha.combined_exact + beta.combined_exact + gamma.combined_exact
    if total >= 0:
        raise NegativityViolation(
            f"sigma bounds sum to {total} >= 0 for {t}; new upper bound unavailable"
        )
    s = t.sum
    radicand = (
        Fraction(s * s, 4)
        - Fraction(a * a + b * b + c * c, 6)
        - 2 * t.product * total
    )
    if radicand < 0:
        raise ArithmeticError(f"negative radicand {radicand} for {t}; sigma bound broken")
    value = sqrt_upper(radicand) - Fraction(s, 2)
    return value, (alpha, beta, gamma)


def frobenius_upper_new(t: Triple, iterations: int = 2, combine: str = "min") -> float:
    """The new upper bound for g(a,b,c), as a float rounded upward."""
    value, _ = new_upper_bound_exact(t, iterations, combine)
    return float_up(value)


@dataclass(frozen=True)
class BoundReport:
    """Every bound plus the exact Frobenius number for one triple (g scale)."""

    triple: Triple
    g_exact: int
    g_new_upper: float
    g_known_upper: int
    g_davison_lower: float
    g_bdr_upper: float
    alpha: ArrangementBound
    beta: ArrangementBound
    gamma: ArrangementBound
    iterations: int
    combine: str


def build_bound_report(t: Triple, iterations: int = 2, combine: str = "min") -> BoundReport:
    from .frobenius import frobenius_exact

    value, (alpha, beta, gamma) = new_upper_bound_exact(t, iterations, combine)
    return BoundReport(
        triple=t,
        g_exact=frobenius_exact((t.a, t.b, t.c)),
        g_new_upper=float_up(value),
        g_known_upper=bound_known_combined(t),
        g_davison_lower=bound_davison_lower(t),
        g_bdr_upper=bound_bdr_sqrt(t),
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        iterations=iterations,
        combine=combine,
    )
