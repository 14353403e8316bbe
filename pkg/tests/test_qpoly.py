import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qrat.qpoly import (
    ONE,
    ZERO,
    IntPolynomial,
    LaurentFraction,
    exact_div,
    poly_divmod,
    poly_eval_int,
    poly_gcd,
    q_binomial,
    q_factorial,
    q_integer,
    q_integer_inverse,
    render,
)

polys = st.lists(st.integers(-20, 20), max_size=7).map(IntPolynomial)
nonzero = polys.filter(bool)


def test_trailing_zeros_stripped():
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial((0, 0)) == ZERO
    assert ZERO.degree == -1


def test_render():
    assert render(IntPolynomial((1, 2, 0, 1))) == "1 + 2*q + q^3"
    assert render(IntPolynomial((0, -1, 3))) == "-q + 3*q^2"
    assert render(ZERO) == "0"


def test_q_integers():
    assert q_integer(1) == ONE
    assert q_integer(4).coeffs == (1, 1, 1, 1)
    assert q_factorial(3).coeffs == (1, 2, 2, 1)
    assert q_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)


def test_gcd_small():
    a = IntPolynomial((-1, 0, 1))  # q^2 - 1
    b = IntPolynomial((-1, 1))
    g = poly_gcd(a, b)
    assert g == b or g == IntPolynomial((1, -1))


@given(polys, polys)
def test_add_mul_commute(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(polys, polys, polys)
def test_mul_associative_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, nonzero)
def test_divmod_identity(a, b):
    # only exact over Z when b is monic
    b = b + IntPolynomial.monomial(b.degree + 1)
    quo, rem = poly_divmod(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


@given(nonzero, nonzero, nonzero)
def test_gcd_divides(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert exact_div(a * c, g) * g == a * c
    assert exact_div(b * c, g) * g == b * c
    # g is primitive, so the primitive part of the common factor divides it
    assert exact_div(g, c.primitive()) * c.primitive() == g


@given(polys, st.integers(-5, 5))
def test_eval_is_ring_map(a, x):
    assert poly_eval_int(a * a, x) == poly_eval_int(a, x) ** 2


@given(st.integers(0, 14).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_q_binomial_symmetry_and_pascal(nk):
    n, k = nk
    assert q_binomial(n, k) == q_binomial(n, n - k)
    assert poly_eval_int(q_binomial(n, k), 1) == math.comb(n, k)
    if 0 < k < n:
        pascal = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)
        assert q_binomial(n, k) == pascal


def test_q_binomial_domain():
    with pytest.raises(ValueError):
        q_binomial(3, 4)


def test_laurent_fraction_ops():
    x = LaurentFraction(q_integer(3), q_integer(2))
    assert x / x == LaurentFraction.of(1)
    assert q_integer_inverse(3) == LaurentFraction(q_integer(3), ONE, -2)
    assert q_integer_inverse(3) * LaurentFraction.monomial(2) == LaurentFraction(q_integer(3))
    num, den = (x + 1).as_polynomials()
    # [3]/[2] + 1 = (2 + 2q + q^2)/(1 + q)
    assert num.coeffs == (2, 2, 1) and den.coeffs == (1, 1)


def test_laurent_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        LaurentFraction(ONE, ZERO)
