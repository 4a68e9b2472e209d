from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from mvhodge.exact import (DivisionRemainderError, GaussianRational, I, LambdaSeries,
                           LaurentPoly, ONE_POLY, Poly, TAU, WindowError, XLaurentRational,
                           ZERO_POLY, exp_tau_lambda, sin_block, tau_divide_exact, x_to_series)

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
gauss = st.builds(GaussianRational, small, small)
polys = st.lists(gauss, max_size=5).map(Poly)


def lam_series(order=6, tau_cap=None):
    return st.builds(
        lambda v, cs: LambdaSeries(v, cs, order=order, tau_cap=tau_cap).truncate(order),
        st.integers(-2, 1), st.lists(polys, min_size=1, max_size=4))


# -- Gaussian rationals and polynomials ---------------------------------------


def test_gaussian_basics():
    z = GaussianRational(1, 2)
    assert z * z.conjugate() == 5
    assert z * z.inverse() == 1
    assert I ** 2 == -1
    assert str(GaussianRational(Fraction(1, 2), -1)) == "1/2-1i"


@given(gauss, gauss, gauss)
def test_gaussian_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO_POLY


@given(polys, polys)
def test_poly_divmod(a, b):
    if not b:
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys, polys)
def test_poly_derivative_leibniz(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


def test_tau_divide_exact():
    assert tau_divide_exact(Poly([0, 1, 1]), TAU) == Poly([1, 1])
    with pytest.raises(DivisionRemainderError):
        tau_divide_exact(Poly([1, 1]), TAU)


def test_poly_truncate_is_homomorphism():
    a, b = Poly([1, 2, 3, 4]), Poly([5, 0, -1, 2])
    assert (a * b).truncate(2) == a.truncate(2).mul(b.truncate(2), 2)


# -- lambda series -------------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(lam_series(), lam_series(), lam_series())
def test_series_ring_axioms(a, b, c):
    lhs, rhs = (a + b) * c, a * c + b * c
    hi = min(lhs.order, rhs.order)
    assert lhs.truncate(hi) == rhs.truncate(hi)
    assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(lam_series(order=8))
def test_series_inverse(a):
    lead = a.coefficient(a.valuation) if not a.is_zero else ZERO_POLY
    if a.is_zero or not lead.is_constant:
        return
    p = a * a.inverse()
    assert p.truncate(min(p.order, a.order - a.valuation)) == LambdaSeries.constant(
        1, min(p.order, a.order - a.valuation))


def test_window_tracking():
    a = LambdaSeries(-1, [1, 0, 2], order=4)
    b = LambdaSeries(2, [3], order=5)
    assert (a * b).order == min(4 + 2, 5 - 1)
    assert a.inverse().order == 4 - 2 * (-1)
    with pytest.raises(WindowError):
        a.coefficient(4)
    z = a - a
    assert z.is_zero and z.valuation == z.order


def test_tau_cap_truncation():
    s = LambdaSeries(0, [Poly([1, 2, 3])], order=2, tau_cap=1)
    assert s.coefficient(0) == Poly([1, 2])
    assert s.d_tau().tau_cap == 0
    with pytest.raises(WindowError):
        s.evaluate_tau(1)


@settings(max_examples=40, deadline=None)
@given(st.lists(polys, min_size=1, max_size=4))
def test_exp_log_roundtrip(cs):
    s = LambdaSeries(1, cs, order=6)
    assert s.exp().log() == s.truncate(6)


def test_sin_block_against_sympy():
    lam = sp.symbols("lam")
    for k in (1, 2, 3):
        got = sin_block(k, 9)
        ref = sp.series(2 * sp.sin(k * lam / 2), lam, 0, 9).removeO()
        for e in range(9):
            assert got.coefficient(e)[0].re == Fraction(str(ref.coeff(lam, e)))
        inv = got.inverse()
        ref_inv = sp.series(1 / (2 * sp.sin(k * lam / 2)), lam, 0, 7).removeO()
        for e in range(-1, 7):
            assert inv.coefficient(e)[0].re == Fraction(str(ref_inv.coeff(lam, e)))


def test_exp_tau_lambda():
    c = Poly([0, GaussianRational(0, 1)])  # i * tau
    e = exp_tau_lambda(c, 4)
    assert e.coefficient(2) == Poly([0, 0, Fraction(-1, 2)])


# -- Laurent polynomials and rational functions in x ------------------------------


def test_laurent_substitution():
    p = LaurentPoly.from_terms({-1: 1, 2: 3})
    assert p.substitute_power(2) == LaurentPoly.from_terms({-2: 1, 4: 3})


def test_sine_block_expansion_matches_series():
    for k in (1, 2, 5):
        r = XLaurentRational.sine_block(k)
        assert x_to_series(r, 7) == sin_block(k, 7)
        assert x_to_series(r.inverse(), 7) == sin_block(k, 9).inverse().truncate(7)


def test_xrational_field():
    a = XLaurentRational.sine_block(2) / XLaurentRational.sine_block(1)
    b = XLaurentRational.monomial(1) + XLaurentRational.monomial(-1)
    assert a == b  # 2 sin(lambda) / 2 sin(lambda/2) = 2 cos(lambda/2) = x + 1/x
    assert a * a.inverse() == XLaurentRational.constant(1)


def test_constants():
    assert ONE_POLY * 3 == Poly([3])
