from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mvhodge.exact import LaurentPoly, XLaurentRational
from mvhodge.partitions import EMPTY, Partition, enumerate_partitions
from mvhodge.symfunc import (MPoly, PowerSumElement, cauchy_check, evaluate_power_sums,
                             graded_exp, graded_log, key_identity_check, principal_specialization,
                             principal_specialization_via_power_sums, schur_expand,
                             schur_oracle_agrees, schur_tableaux_oracle)

P = PowerSumElement


def pm(*parts, c=1):
    return P.monomial(Partition.from_parts(parts), c)


coef = st.fractions(min_value=-3, max_value=3, max_denominator=4)
small_parts = st.lists(st.integers(1, 3), min_size=1, max_size=2)
elements = st.dictionaries(small_parts.map(Partition.from_parts), coef, max_size=4).map(P)


def test_product_and_derivative():
    assert pm(1) * pm(1) == pm(1, 1)
    assert pm(1, 1).diff(1) == pm(1, c=2)
    assert pm(2, 1).diff(2) == pm(1)
    assert pm(3).diff(1) == P()


@given(elements, elements)
def test_derivative_leibniz(a, b):
    for i in (1, 2, 3):
        assert (a * b).diff(i) == a.diff(i) * b + a * b.diff(i)


@settings(max_examples=50, deadline=None)
@given(elements)
def test_graded_exp_log_roundtrip(a):
    top = 5
    assert graded_log(graded_exp(a, top), top) == a.truncate(top)


def test_graded_exp_small():
    e = graded_exp(pm(1), 3)
    assert e == P({EMPTY: 1, Partition([1]): 1, Partition([1, 1]): Fraction(1, 2),
                   Partition([1, 1, 1]): Fraction(1, 6)})
    with pytest.raises(ValueError):
        graded_log(pm(1), 2)


def test_schur_examples():
    # s_(2) = (p_1^2 + p_2)/2, s_(1,1) = (p_1^2 - p_2)/2
    assert schur_expand((2,)) == P({Partition([1, 1]): Fraction(1, 2), Partition([2]): Fraction(1, 2)})
    assert schur_expand((1, 1)) == P({Partition([1, 1]): Fraction(1, 2), Partition([2]): Fraction(-1, 2)})


def test_schur_three_variables_by_hand():
    # s_(2,1)(x1, x2, x3) is the sum of x_i^2 x_j (i != j) plus 2 x1 x2 x3
    s = schur_tableaux_oracle((2, 1), 3)
    terms = {(2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): 1, (0, 2, 1): 1, (1, 0, 2): 1, (0, 1, 2): 1,
             (1, 1, 1): 2}
    assert s == MPoly(3, terms)


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_matches_tableaux(n):
    for nu in enumerate_partitions(n):
        assert schur_oracle_agrees(nu)


def test_schur_vanishes_with_too_few_variables():
    assert evaluate_power_sums(schur_expand((1, 1, 1)), 2) == MPoly(2)


def test_principal_specialization_examples():
    # s_(1)(1, q, ...) = 1/(1-q)
    expected = XLaurentRational(LaurentPoly.monomial(0), LaurentPoly.from_terms({0: 1, 1: -1}))
    assert principal_specialization((1,)) == expected


@pytest.mark.parametrize("n", range(1, 9))
def test_principal_specialization_closed_form(n):
    for nu in enumerate_partitions(n):
        assert principal_specialization(nu) == principal_specialization_via_power_sums(nu)


def test_key_identity():
    assert all(key_identity_check(rho) for n in range(1, 9) for rho in enumerate_partitions(n))


@pytest.mark.parametrize("d", range(0, 6))
def test_cauchy(d):
    for nvars in (1, 2, 3):
        assert cauchy_check(d, nvars)
