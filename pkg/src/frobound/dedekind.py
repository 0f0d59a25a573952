"""Dedekind-Rademacher sums, their reciprocity law, and Fourier-Dedekind sums.

S(a,b;x,y) is the b-term sum of products of the integer-vanishing sawtooth
sts; sigma_t(a,b;c) is the c-term sum of products of the plain sawtooth st
that shows up in the three-part restricted partition count.  Everything here
is exact rational arithmetic; the naive evaluators run the defining sums over
a fixed common denominator so large moduli stay cheap.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .arith import (
    Rational,
    bernoulli_psi2,
    mod_inverse,
    sawtooth_sts,
)


def _as_fraction(x: Rational | int) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def rademacher_sum_naive(a: int, b: int, x: Rational | int = 0, y: Rational | int = 0) -> Fraction:
    """S(a,b;x,y) = sum over k in [0,b) of sts(a(k+y)/b + x) * sts((k+y)/b).

    Exact; b >= 1; a may be any integer, coprimality is not required.
    """
    if b < 1:
        raise ValueError(f"b must be a positive integer, got {b}")
    x, y = _as_fraction(x), _as_fraction(y)
    # (k+y)/b        = (k*qy + py) / dv
    # a(k+y)/b + x   = (a*(k*qy + py)*qx + px*b*qy) / du
    py, qy = y.numerator, y.denominator
    px, qx = x.numerator, x.denominator
    dv = b * qy
    du = dv * qx
    # numerators advance by fixed steps; track them incrementally mod du/dv
    nv = py % dv
    nu = (a * py * qx + px * dv) % du
    step_u = (a * qy * qx) % du
    acc = 0
    for _ in range(b):
        if nv and nu:
            acc += (2 * nu - du) * (2 * nv - dv)
        nv += qy
        if nv >= dv:
            nv -= dv
        nu += step_u
        if nu >= du:
            nu -= du
    return Fraction(acc, 4 * du * dv)


def reciprocity_rhs_Q(a: int, b: int, x: Rational | int = 0, y: Rational | int = 0) -> Fraction:
    """Right-hand side Q(a,b;x,y) of the reciprocity law S(a,b;x,y)+S(b,a;y,x)=Q.

    Two branches: one for x,y both integers, one for everything else.  The
    branches differ by more than a removable discontinuity, so the
    integrality test is exact.
    """
    if a < 1 or b < 1:
        raise ValueError(f"a and b must be positive, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise ValueError(f"a and b must be coprime, got gcd({a},{b}) = {math.gcd(a, b)}")
    x, y = _as_fraction(x), _as_fraction(y)
    if x.denominator == 1 and y.denominator == 1:
        return Fraction(-1, 4) + (Fraction(a, b) + Fraction(1, a * b) + Fraction(b, a)) / 12
    return sawtooth_sts(x) * sawtooth_sts(y) + (
        Fraction(a, b) * bernoulli_psi2(y)
        + Fraction(1, a * b) * bernoulli_psi2(a * y + b * x)
        + Fraction(b, a) * bernoulli_psi2(x)
    ) / 2


def rademacher_sum_fast(a: int, b: int, x: Rational | int = 0, y: Rational | int = 0) -> Fraction:
    """Euclidean-type evaluation of S(a,b;x,y) in O(log b) reciprocity steps.

    Each step replaces a by its least nonnegative residue r = a mod b; the
    discarded multiple q*b re-enters through the shift x -> x + q*y (sts is
    1-periodic, so only q*y mod 1 survives).  Then reciprocity swaps the
    arguments, shrinking the modulus as in the Euclidean algorithm.
    Requires gcd(a,b) = 1; agrees exactly with rademacher_sum_naive.
    """
    if b < 1:
        raise ValueError(f"b must be a positive integer, got {b}")
    if math.gcd(a, b) != 1:
        raise ValueError(f"a and b must be coprime, got gcd({a},{b}) = {math.gcd(a, b)}")
    x, y = _as_fraction(x), _as_fraction(y)
    total = Fraction(0)
    sign = 1
    while True:
        q, a = divmod(a, b)
        if q:
            x += q * y
        if b == 1:
            # single k = 0 term: sts(a*y + x) * sts(y), and a == 0 here
            total += sign * sawtooth_sts(x) * sawtooth_sts(y)
            return total
        total += sign * reciprocity_rhs_Q(a, b, x, y)
        sign = -sign
        a, b = b, a
        x, y = y, x


def cauchy_schwarz_bound(b: int) -> tuple[Fraction, Fraction]:
    """Exact radicand factors (b/12 + 1/(6b), b/12 - 1/4 + 1/(6b)).

    |S(a,b;x,0)| <= sqrt of the product, for every a coprime to b and every
    rational x.  Callers take the square root themselves (and pick the
    rounding direction).
    """
    if b < 1:
        raise ValueError(f"b must be a positive integer, got {b}")
    base = Fraction(b, 12) + Fraction(1, 6 * b)
    return base, base - Fraction(1, 4)


def _validate_sigma_args(a: int, b: int, c: int) -> None:
    if c < 1:
        raise ValueError(f"modulus c must be positive, got {c}")
    if a < 1 or b < 1:
        raise ValueError(f"a and b must be positive, got ({a}, {b})")
    if math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
        raise ValueError(f"a and b must both be coprime to c, got ({a}, {b}; {c})")


def _sigma_scaled(t: int, a: int, b: int, c: int) -> int:
    # 4*c^2 * sigma_t(a,b;c), always an integer
    ainv = mod_inverse(a, c)
    n1 = (-ainv * t) % c
    step = (-ainv * b) % c
    acc = 0
    for m in range(c):
        acc += (2 * n1 - c) * (2 * m - c)
        n1 += step
        if n1 >= c:
            n1 -= c
    return acc


def sigma_naive(t: int, a: int, b: int, c: int) -> Fraction:
    """sigma_t(a,b;c) = sum over m in [0,c) of st(-a^{-1}(bm+t)/c) * st(m/c).

    Uses the plain sawtooth st (value -1/2 at integers), so the m = 0 term
    and the unique m with c | bm+t contribute.  Requires gcd(a,c) =
    gcd(b,c) = 1.
    """
    _validate_sigma_args(a, b, c)
    return Fraction(_sigma_scaled(t, a, b, c), 4 * c * c)


def sigma_via_rademacher(t: int, a: int, b: int, c: int) -> Fraction:
    """sigma_t(a,b;c) rewritten through S(-a^{-1}b, c; -a^{-1}t/c, 0).

    Correction terms: +1/4 when c | t, otherwise
    -sts(-a^{-1}t/c)/2 - sts(-b^{-1}t/c)/2.  Exactly equals sigma_naive.
    """
    _validate_sigma_args(a, b, c)
    ainv = mod_inverse(a, c)
    binv = mod_inverse(b, c)
    x = Fraction(-ainv * t, c)
    s = rademacher_sum_fast(-ainv * b, c, x, 0)
    if t % c == 0:
        return s + Fraction(1, 4)
    return s - sawtooth_sts(x) / 2 - sawtooth_sts(Fraction(-binv * t, c)) / 2
