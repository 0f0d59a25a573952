"""Exact arithmetic primitives shared by every other module.

All fractional quantities are `fractions.Fraction` values (arbitrary
precision, always normalized).  The only inexact operation in the whole
library is the square root, provided here with an explicit rounding
direction so callers can keep bounds one-sided.
"""

from __future__ import annotations

import math
from fractions import Fraction

# The value type for all sawtooth/Dedekind-sum arithmetic.
Rational = Fraction

# plain Euclid; gcd(u, 0) == u
gcd = math.gcd

_HALF = Fraction(1, 2)
_SIXTH = Fraction(1, 6)


def mod_inverse(a: int, m: int) -> int:
    """Return r in [0, m) with a*r == 1 (mod m); by convention 0 for m == 1."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise ValueError(f"{a} is not invertible modulo {m} (gcd != 1)") from None


def least_nonneg_residue(a: int, m: int) -> int:
    """Least nonnegative residue of a modulo m (correct for negative a)."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    return a % m


def sawtooth_st(x: Rational | int) -> Fraction:
    """x - floor(x) - 1/2; equals -1/2 at integers."""
    x = Fraction(x)
    return x - math.floor(x) - _HALF


def sawtooth_sts(x: Rational | int) -> Fraction:
    """Like sawtooth_st but 0 at integers; odd and 1-periodic."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - _HALF


def bernoulli_psi2(x: Rational | int) -> Fraction:
    """Periodic second Bernoulli function (x-floor(x))^2 - (x-floor(x)) + 1/6."""
    u = Fraction(x)
    u -= math.floor(u)
    return u * u - u + _SIXTH


def sqrt_lower(x: Rational | int, bits: int = 64) -> Fraction:
    """Rational lower bound for sqrt(x), within 2^-bits relative error."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("square root of negative value")
    n, d = x.numerator, x.denominator
    # sqrt(n/d) = sqrt(n*d)/d, bracketed via isqrt on a scaled integer
    s = math.isqrt((n * d) << (2 * bits))
    return Fraction(s, d << bits)


def sqrt_upper(x: Rational | int, bits: int = 64) -> Fraction:
    """Rational upper bound for sqrt(x), within 2^-bits relative error."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("square root of negative value")
    n, d = x.numerator, x.denominator
    m = (n * d) << (2 * bits)
    s = math.isqrt(m)
    if s * s != m:
        s += 1
    return Fraction(s, d << bits)


def float_down(x: Rational | int) -> float:
    """Largest float <= x."""
    x = Fraction(x)
    f = float(x)
    if Fraction(f) > x:
        f = math.nextafter(f, -math.inf)
    return f


def float_up(x: Rational | int) -> float:
    """Smallest float >= x."""
    x = Fraction(x)
    f = float(x)
    if Fraction(f) < x:
        f = math.nextafter(f, math.inf)
    return f
