"""Reading Hodge-integral polynomials off the connected series.

``C_{g,mu}(tau)`` is the ``lambda^{2g-2+l(mu)}`` coefficient of ``R_mu``.  It
factors as an explicit prefactor times a polynomial ``H`` of degree at most
``2g`` with real coefficients; ``H`` is what we return.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..exact import I, ONE_POLY, Poly, WindowError, GaussianRational
from ..partitions import Partition, aut_order
from .series import connected_series


class IdentityViolation(ArithmeticError):
    """The extracted coefficient does not have the predicted shape."""

    def __init__(self, message: str, locator: dict):
        super().__init__(message)
        self.locator = locator


def prefactor(mu) -> Poly:
    """``-(i^{|mu|+l}/|Aut mu|) [tau(tau+1)]^{l-1} prod_i prod_{a<mu_i} (mu_i tau + a)/(mu_i-1)!``."""
    mu = Partition(mu)
    if not mu:
        raise ValueError("prefactor needs a nonempty partition")
    l = len(mu)
    scalar = -(I ** (mu.size + l)) * Fraction(1, aut_order(mu))
    out = Poly([0, 1, 1]) ** (l - 1)
    for m in mu:
        for a in range(1, m):
            out = out * Poly([a, m])
        scalar = scalar * Fraction(1, factorial(m - 1))
    return out * scalar


@dataclass(frozen=True)
class HodgePolynomial:
    g: int
    mu: Partition
    H: Poly

    @property
    def coefficients(self) -> list[Fraction]:
        return self.H.real_coefficients()

    def at(self, tau) -> Fraction:
        return self.H.evaluate(GaussianRational.coerce(tau)).re


def hodge_coefficient(g: int, mu, lambda_order: int | None = None) -> Poly:
    """``C_{g,mu}(tau)`` with exact tau dependence."""
    mu = Partition(mu)
    if g < 0 or not mu:
        raise ValueError("need g >= 0 and a nonempty partition")
    k = 2 * g - 2 + len(mu)
    order = k + 1 if lambda_order is None else lambda_order
    if order <= k:
        raise WindowError(f"lambda order {order} does not reach lambda^{k}")
    return connected_series(mu.size, order, None)[mu].coefficient(k)


def hodge_extract(g: int, mu, lambda_order: int | None = None) -> HodgePolynomial:
    """Divide the prefactor out of ``C_{g,mu}`` and validate the quotient."""
    mu = Partition(mu)
    C = hodge_coefficient(g, mu, lambda_order)
    where = {"g": g, "mu": list(mu)}
    top = 2 * g - 2 + mu.size + len(mu)
    if C.degree > top:
        raise IdentityViolation(f"C has tau-degree {C.degree} > {top}", where)
    q, r = C.divmod(prefactor(mu))
    if r:
        raise IdentityViolation("prefactor does not divide C exactly", dict(where, remainder=str(r)))
    if not q.is_real:
        raise IdentityViolation("quotient has a nonzero imaginary part",
                                dict(where, imaginary=str(q.imag_part())))
    if q.degree > 2 * g:
        raise IdentityViolation(f"quotient has tau-degree {q.degree} > {2 * g}", where)
    if g == 0:
        expected = Fraction(mu.size) ** (len(mu) - 3)
        if q != ONE_POLY * expected:
            raise IdentityViolation("genus-zero value differs from |mu|^(l-3)",
                                    dict(where, expected=str(expected), actual=str(q)))
    return HodgePolynomial(g, mu, q)


def lambda_g_moments(g_max: int) -> list[Fraction]:
    """Taylor coefficients ``b_g`` of ``(t/2)/sin(t/2) = sum b_g t^{2g}``.

    Built from the exact sine series by a plain power-series inversion.
    """
    n = g_max + 1
    # sin(t/2)/(t/2) = sum (-1)^m t^{2m} / (4^m (2m+1)!)
    s = [Fraction((-1) ** m, 4 ** m * factorial(2 * m + 1)) for m in range(n)]
    inv = [Fraction(0)] * n
    inv[0] = Fraction(1)
    for m in range(1, n):
        inv[m] = -sum(s[j] * inv[m - j] for j in range(1, m + 1))
    return inv


def normalized_tau_zero(h: HodgePolynomial) -> Fraction:
    """``H_{g,(n)}(0) / n^{2g-2}``; equal to ``b_g`` for one-part partitions."""
    if len(h.mu) != 1:
        raise ValueError("normalization defined for one-part partitions")
    n = h.mu[0]
    return h.at(0) / Fraction(n) ** (2 * h.g - 2)
