import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from frobound.arith import (
    bernoulli_psi2,
    float_down,
    float_up,
    gcd,
    least_nonneg_residue,
    mod_inverse,
    sawtooth_st,
    sawtooth_sts,
    sqrt_lower,
    sqrt_upper,
)

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=10**4)


@pytest.mark.parametrize("u,v,expected", [(12, 18, 6), (7, 1, 1), (35, 64, 1), (12, 0, 12)])
def test_gcd_examples(u, v, expected):
    assert gcd(u, v) == expected


@pytest.mark.parametrize("a,m,expected", [(3, 7, 5), (1, 9, 1), (2, 5, 3), (5, 1, 0), (-3, 7, 2)])
def test_mod_inverse_examples(a, m, expected):
    assert mod_inverse(a, m) == expected


def test_mod_inverse_rejects_non_coprime():
    with pytest.raises(ValueError):
        mod_inverse(6, 9)
    with pytest.raises(ValueError):
        mod_inverse(3, 0)


@given(st.integers(-(10**6), 10**6), st.integers(2, 10**6))
def test_mod_inverse_round_trip(a, m):
    assume(math.gcd(a, m) == 1)
    r = mod_inverse(a, m)
    assert 0 <= r < m
    assert (a * r) % m == 1


@pytest.mark.parametrize("a,m,expected", [(-3, 7, 4), (14, 7, 0), (10, 3, 1), (-21, 21, 0)])
def test_least_nonneg_residue_examples(a, m, expected):
    assert least_nonneg_residue(a, m) == expected


@pytest.mark.parametrize(
    "x,expected",
    [(0, Fraction(-1, 2)), (Fraction(1, 4), Fraction(-1, 4)), (Fraction(5, 4), Fraction(-1, 4))],
)
def test_sawtooth_st_examples(x, expected):
    assert sawtooth_st(x) == expected


@pytest.mark.parametrize(
    "x,expected",
    [(0, 0), (Fraction(1, 3), Fraction(-1, 6)), (Fraction(-1, 3), Fraction(1, 6))],
)
def test_sawtooth_sts_examples(x, expected):
    assert sawtooth_sts(x) == expected


@given(rationals)
def test_sawtooth_sts_is_odd_and_periodic(x):
    assert sawtooth_sts(-x) == -sawtooth_sts(x)
    assert sawtooth_sts(x + 1) == sawtooth_sts(x)


@given(rationals)
def test_sawtooth_st_vs_sts(x):
    if x.denominator == 1:
        assert sawtooth_st(x) == Fraction(-1, 2)
        assert sawtooth_sts(x) == 0
    else:
        assert sawtooth_st(x) == sawtooth_sts(x)


@pytest.mark.parametrize(
    "x,expected",
    [(0, Fraction(1, 6)), (Fraction(1, 2), Fraction(-1, 12)), (Fraction(7, 2), Fraction(-1, 12))],
)
def test_bernoulli_psi2_examples(x, expected):
    assert bernoulli_psi2(x) == expected


@given(rationals)
def test_bernoulli_psi2_periodic_and_bounded(x):
    assert bernoulli_psi2(x + 1) == bernoulli_psi2(x)
    assert Fraction(-1, 12) <= bernoulli_psi2(x) <= Fraction(1, 6)


def test_bernoulli_psi2_bounds_on_dense_grid():
    for q in range(1, 60):
        for p in range(-q, 2 * q + 1):
            v = bernoulli_psi2(Fraction(p, q))
            assert Fraction(-1, 12) <= v <= Fraction(1, 6)


@given(rationals, rationals)
def test_fraction_arithmetic_stays_normalized(x, y):
    for v in (x + y, x - y, x * y):
        assert v.denominator > 0
        assert math.gcd(abs(v.numerator), v.denominator) == 1
    if y != 0:
        v = x / y
        assert v.denominator > 0
        assert math.gcd(abs(v.numerator), v.denominator) == 1


@given(st.fractions(min_value=0, max_value=10**9, max_denominator=10**6))
def test_sqrt_brackets(x):
    lo, hi = sqrt_lower(x), sqrt_upper(x)
    assert lo * lo <= x <= hi * hi
    assert hi - lo <= Fraction(1, 2**62) * (1 + hi)


def test_sqrt_exact_squares():
    assert sqrt_lower(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_upper(Fraction(9, 4)) == Fraction(3, 2)


@given(rationals)
def test_float_direction(x):
    lo, hi = float_down(x), float_up(x)
    assert Fraction(lo) <= x <= Fraction(hi)


def test_floor_toward_minus_infinity():
    # sawtooth at negative arguments relies on floor(-1/3) == -1
    assert sawtooth_st(Fraction(-1, 3)) == Fraction(-1, 3) + 1 - Fraction(1, 2)
    assert math.floor(Fraction(-1, 3)) == -1
