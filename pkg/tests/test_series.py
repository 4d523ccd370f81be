import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bernoulli_recurrence, set_partition_count
from polybern.series import (
    Series,
    TruncationError,
    gf_family,
    gf_poly_bernoulli,
    order,
    polylog_delta_series,
    series_add,
    series_compose,
    series_derivative,
    series_inverse,
    series_mul,
)

CAP = 10

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def series_st(cap=6, invertible=False, delta=False):
    def build(cs):
        cs = list(cs)
        if delta:
            cs[0] = Fraction(0)
        return Series(tuple(cs))

    elems = st.lists(fractions, min_size=cap + 1, max_size=cap + 1)
    s = elems.map(build)
    if invertible:
        s = s.filter(lambda f: f[0] != 0)
    return s


def exp_series(cap=CAP):
    return Series.exp(1, cap)


def t_series(cap=CAP):
    return Series.monomial(1, cap)


def test_add_identity_and_doubling():
    f = Series.from_ordinary([1, 2, 3], cap=CAP)
    assert series_add(f, Series.zero(CAP)) == f
    assert (t_series() + t_series()).coeffs == (0, 2) + (0,) * (CAP - 1)
    assert (exp_series() + exp_series()).coeffs == (2,) * (CAP + 1)


def test_mismatched_caps_rejected():
    with pytest.raises(TruncationError):
        series_add(Series.one(3), Series.one(4))
    with pytest.raises(TruncationError):
        series_mul(Series.one(3), Series.one(4))


def test_mul_examples():
    f = Series.from_ordinary([3, -1, Fraction(1, 2)], cap=CAP)
    assert series_mul(f, Series.one(CAP)) == f
    tt = series_mul(t_series(), t_series())
    assert tt[2] == 2 and sum(tt.coeffs) == 2


def test_mul_stirling_square():
    em1 = exp_series() - 1
    sq = series_mul(em1, em1)
    for n in range(CAP + 1):
        assert sq[n] == 2 * set_partition_count(n, 2)


def test_inverse_examples():
    assert series_inverse(Series.one(CAP)) == Series.one(CAP)
    # (e^t - 1)/t has EGF coefficients 1/(n+1)
    quotient = Series(tuple(Fraction(1, n + 1) for n in range(CAP + 1)))
    assert list(series_inverse(quotient).coeffs) == bernoulli_recurrence(CAP)
    e_neg = series_inverse(exp_series())
    assert e_neg.coeffs == tuple((-1) ** k for k in range(CAP + 1))
    assert series_mul(exp_series(), e_neg) == Series.one(CAP)


def test_inverse_rejects_non_invertible():
    with pytest.raises(ValueError):
        series_inverse(t_series())


def test_order():
    assert order(Series.zero(3)) == math.inf
    assert order(t_series()) == 1
    assert order(exp_series()) == 0


def test_compose_examples():
    f = Series.from_ordinary([2, 1, 5, -3], cap=CAP)
    assert series_compose(f, t_series()) == f
    z = 1 - series_inverse(exp_series())
    li1 = Series.from_ordinary([0] + [Fraction(1, m) for m in range(1, 13)], cap=12)
    z12 = 1 - Series.exp(-1, 12)
    assert series_compose(li1, z12) == Series.monomial(1, 12)
    square = Series.monomial(2, CAP)
    assert series_compose(square, z) == series_mul(z, z)
    for n in range(1, CAP + 1):
        assert series_compose(square, z)[n] == (-1) ** n * 2 * set_partition_count(n, 2)


def test_compose_rejects_invertible_inner():
    with pytest.raises(ValueError):
        series_compose(exp_series(), exp_series())


def test_compose_with_zero_series_gives_constant():
    f = Series.from_ordinary([7, 1, 1], cap=4)
    assert series_compose(f, Series.zero(4)) == Series.constant(7, 4)


def test_polylog_delta_series():
    assert polylog_delta_series(1, 8) == Series.monomial(1, 8)
    li0 = polylog_delta_series(0, 9)
    assert li0.coeffs == (0,) + (1,) * 9
    for k in range(-6, 7):
        f = polylog_delta_series(k, 7)
        assert f[0] == 0
        assert order(f) == 1
    with pytest.raises(ValueError):
        polylog_delta_series(1, -1)


def test_gf_poly_bernoulli():
    assert gf_poly_bernoulli(1, 4).coeffs == (1, Fraction(1, 2), Fraction(1, 6), 0, Fraction(-1, 30))
    # k = 1 agrees with t / (1 - e^{-t}) built from inverse and product
    quotient = Series(tuple(Fraction(1, n + 1) for n in range(CAP + 1)))
    assert gf_poly_bernoulli(1, CAP) == series_mul(series_inverse(quotient), exp_series())
    for k in range(-5, 6):
        assert gf_poly_bernoulli(k, 3)[0] == 1
    assert gf_poly_bernoulli(2, 4)[2] == Fraction(-1, 36)


@pytest.mark.parametrize("k", range(-4, 5))
def test_gf_poly_bernoulli_is_polylog_over_delta(k):
    cap = 9
    z = 1 - Series.exp(-1, cap + 1)
    lhs = series_mul(gf_poly_bernoulli(k, cap + 1), z)
    assert lhs == polylog_delta_series(k, cap + 1)


@pytest.mark.parametrize("k", [-3, 0, 2, 5])
def test_gf_poly_bernoulli_independent_of_cap(k):
    short = gf_poly_bernoulli(k, 6)
    long = gf_poly_bernoulli(k, 11)
    assert long.coeffs[:7] == short.coeffs


def test_gf_family():
    assert gf_family("higher-bernoulli", r=0, cap=5) == Series.one(5)
    euler = gf_family("euler", r=1, cap=6)
    assert euler[0] == 1 and euler[1] == Fraction(-1, 2)
    assert series_mul(euler, (exp_series(6) + 1) * Fraction(1, 2)) == Series.one(6)
    assert gf_family("frobenius-euler", r=1, lam=-1, cap=6) == euler
    with pytest.raises(ValueError):
        gf_family("frobenius-euler", r=1, lam=1, cap=6)
    with pytest.raises(ValueError):
        gf_family("nope", cap=2)


def test_derivative_shifts():
    d = series_derivative(exp_series(5))
    assert d == exp_series(4)
    with pytest.raises(TruncationError):
        series_derivative(Series.one(0))


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st(), series_st())
def test_ring_axioms(f, g, h):
    assert series_mul(f, g) == series_mul(g, f)
    assert series_mul(series_mul(f, g), h) == series_mul(f, series_mul(g, h))
    assert series_mul(f, series_add(g, h)) == series_add(series_mul(f, g), series_mul(f, h))


@settings(max_examples=60, deadline=None)
@given(series_st(invertible=True))
def test_inverse_property(f):
    assert series_mul(f, series_inverse(f)) == Series.one(f.cap)


@settings(max_examples=40, deadline=None)
@given(series_st(), series_st(delta=True))
def test_compose_identities(f, g):
    t = Series.monomial(1, f.cap)
    assert series_compose(f, t) == f
    assert series_compose(t, g) == g
