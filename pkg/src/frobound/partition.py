"""Restricted partition function p_{a,b,c}(n): closed form and counting oracle."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .dedekind import _sigma_scaled


def _validate_parts(parts) -> tuple[int, ...]:
    vals = tuple(int(v) for v in parts)
    if not vals:
        raise ValueError("parts must be nonempty")
    if any(v < 1 for v in vals):
        raise ValueError(f"parts must be positive integers, got {vals}")
    return vals


def partition_count_bruteforce(n: int, parts) -> int:
    """Count nonnegative tuples (m_1,...,m_d) with sum m_i * a_i = n.

    Nested enumeration with early cutoffs; an oracle, not a production path.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    vals = sorted(_validate_parts(parts), reverse=True)

    def count(rem: int, idx: int) -> int:
        if idx == len(vals) - 1:
            return 1 if rem % vals[idx] == 0 else 0
        a = vals[idx]
        return sum(count(rem - a * m, idx + 1) for m in range(rem // a + 1))

    return count(n, 0)


@lru_cache(maxsize=4096)
def _sigma_tables(a: int, b: int, c: int) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    # 4m^2-scaled values of sigma_{-r}(.,.;m) for each cyclic arrangement,
    # indexed by the residue r = n mod m; sigma_t has period m in t.
    ta = tuple(_sigma_scaled(-r, b, c, a) for r in range(a))
    tb = tuple(_sigma_scaled(-r, c, a, b) for r in range(b))
    tc = tuple(_sigma_scaled(-r, a, b, c) for r in range(c))
    return ta, tb, tc


def partition_count_closed(n: int, a: int, b: int, c: int) -> int:
    """Evaluate the closed form for p_{a,b,c}(n): quadratic polynomial part
    plus the three Fourier-Dedekind corrections sigma_{-n}.

    All arithmetic is exact rational (carried over the fixed common
    denominator 12*a^2*b^2*c^2); the result must come out a nonnegative
    integer, and anything else raises rather than rounds.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if min(a, b, c) < 1:
        raise ValueError(f"parts must be positive, got ({a}, {b}, {c})")
    if math.gcd(a, b) != 1 or math.gcd(a, c) != 1 or math.gcd(b, c) != 1:
        raise ValueError(f"({a}, {b}, {c}) must be pairwise coprime")
    ta, tb, tc = _sigma_tables(a, b, c)
    s = a + b + c
    q = a * a + b * b + c * c
    scaled = (
        a * b * c * (6 * n * n + 6 * n * s + q)
        + 3 * b * b * c * c * ta[n % a]
        + 3 * a * a * c * c * tb[n % b]
        + 3 * a * a * b * b * tc[n % c]
    )
    denom = 12 * a * a * b * b * c * c
    value, rem = divmod(scaled, denom)
    if rem:
        raise ArithmeticError(
            f"closed form gave non-integer {Fraction(scaled, denom)} for "
            f"p_({a},{b},{c})({n}); sigma implementation is broken"
        )
    if value < 0:
        raise ArithmeticError(f"closed form gave negative count {value} for p_({a},{b},{c})({n})")
    return value
