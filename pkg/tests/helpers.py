"""Independent sympy oracle for lambda-tau expansions."""

from fractions import Fraction

import sympy as sp

from mvhodge.exact import GaussianRational, LambdaSeries, Poly

lam, tau = sp.symbols("lam tau")


def _gauss(c) -> GaussianRational:
    re, im = sp.nsimplify(sp.re(c)), sp.nsimplify(sp.im(c))
    return GaussianRational(Fraction(str(re)), Fraction(str(im)))


def sympy_series(expr, lo: int, hi: int) -> dict[int, Poly]:
    """Coefficients of ``lam^k`` for ``lo <= k < hi`` as polynomials in tau."""
    s = sp.expand(sp.series(expr, lam, 0, hi).removeO())
    out = {}
    for k in range(lo, hi):
        c = sp.expand(s.coeff(lam, k))
        p = sp.Poly(c, tau)
        coeffs = [_gauss(x) for x in reversed(p.all_coeffs())]
        out[k] = Poly(coeffs)
    return out


def agrees(series: LambdaSeries, expr, lo: int, hi: int, tau_max=None) -> bool:
    ref = sympy_series(expr, lo, hi)
    for k, p in ref.items():
        got = series.coefficient(k)
        if tau_max is not None:
            p, got = p.truncate(tau_max), got.truncate(tau_max)
        if got != p:
            return False
    return True
