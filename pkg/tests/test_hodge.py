from fractions import Fraction

import pytest
import sympy as sp

from mvhodge.exact import I, ONE_POLY, Poly, WindowError
from mvhodge.mvcore.hodge import (HodgePolynomial, IdentityViolation, hodge_coefficient,
                                  hodge_extract, lambda_g_moments, normalized_tau_zero, prefactor)
from mvhodge.partitions import Partition, enumerate_partitions

# (t/2)/sin(t/2) = 1 + t^2/24 + 7 t^4/5760 + 31 t^6/967680 + ..., frozen from sympy
B = {1: Fraction(1, 24), 2: Fraction(7, 5760), 3: Fraction(31, 967680)}


def test_frozen_moments_against_sympy():
    t = sp.symbols("t")
    s = sp.series((t / 2) / sp.sin(t / 2), t, 0, 8).removeO()
    for g, b in B.items():
        assert Fraction(str(s.coeff(t, 2 * g))) == b
    assert lambda_g_moments(3)[1:] == [B[1], B[2], B[3]]


def test_prefactor_examples():
    # mu = (1): -(i^2) = 1
    assert prefactor((1,)) == ONE_POLY
    # mu = (1,1): -(i^4 / 2) tau (tau + 1)
    assert prefactor((1, 1)) == Poly([0, Fraction(-1, 2), Fraction(-1, 2)])
    # mu = (2): -(i^3) (2 tau + 1) = i (2 tau + 1)
    assert prefactor((2,)) == Poly([1, 2]) * I


def test_genus_zero_values():
    for mu in [(1, 1, 1), (2, 1, 1), (1, 1, 1, 1), (3, 2, 1), (2,), (1,), (1, 1)]:
        h = hodge_extract(0, mu)
        mu = Partition(mu)
        assert h.H == ONE_POLY * Fraction(mu.size) ** (len(mu) - 3)
    assert hodge_extract(0, (1, 1, 1)).coefficients == [1]


def test_genus_one_single_box():
    h = hodge_extract(1, (1,))
    assert isinstance(h, HodgePolynomial)
    assert h.at(0) == Fraction(1, 24)


@pytest.mark.parametrize("g", [1, 2, 3])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_one_part_tau_zero(g, n):
    h = hodge_extract(g, (n,))
    assert normalized_tau_zero(h) == B[g]
    assert h.at(0) == Fraction(n) ** (2 * g - 2) * B[g]


def test_one_box_is_tau_free():
    # the coefficient for mu = (1) is independent of tau
    for g in range(1, 4):
        assert hodge_extract(g, (1,)).H.degree == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_structure_small(n):
    for mu in enumerate_partitions(n):
        for g in range(0, 3):
            if 2 * g - 2 + len(mu) <= 5:
                h = hodge_extract(g, mu)
                assert h.H.is_real and h.H.degree <= 2 * g


def test_window_errors():
    with pytest.raises(WindowError):
        hodge_coefficient(1, (1,), lambda_order=1)
    with pytest.raises(ValueError):
        hodge_coefficient(-1, (1,))


def test_identity_violation_locator():
    e = IdentityViolation("x", {"g": 1, "mu": [1]})
    assert e.locator["mu"] == [1]
