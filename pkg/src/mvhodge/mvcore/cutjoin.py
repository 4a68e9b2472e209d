"""The cut-and-join operator, its matrix on a degree slice, and the tau-flow checks.

The bare operator is

    A = sum over ordered (i, j) of  ij p_{i+j} d_i d_j + (i+j) p_i p_j d_{i+j}

and the flow reads ``dR•/dtau = (i lambda/2) A R•``; the connected series
picks up the extra term ``sum ij p_{i+j} d_iR d_jR``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..characters import character_table
from ..exact import I, LambdaSeries, TAU
from ..partitions import Partition, enumerate_partitions, kappa, z, cut_join_neighbors
from ..encode import rat
from ..symfunc import PowerSumElement, ps_diff, ps_mul
from .report import PASS, VerificationReport, compare_series_maps, fail
from .series import connected_series, disconnected_series, initial_disconnected

HALF_I = I * Fraction(1, 2)


def _bare_on_monomial(mu: Partition) -> dict:
    """``A p_mu`` as ``{eta: integer}``; twice the group-theoretic neighbour counts."""
    if not mu:
        return {}
    return {eta: 2 * c for eta, c in cut_join_neighbors(mu).as_dict().items()}


def cutjoin_operator(F: PowerSumElement) -> PowerSumElement:
    """The bare operator ``A`` (no ``i lambda/2`` factor), via neighbour counts."""
    terms: dict = {}
    for mu, c in F.terms.items():
        for eta, k in _bare_on_monomial(mu).items():
            t = c * k
            terms[eta] = terms[eta] + t if eta in terms else t
    return PowerSumElement(terms)


def cutjoin_operator_literal(F: PowerSumElement) -> PowerSumElement:
    """The bare operator by literal differentiation (independent code path)."""
    top = F.max_degree
    out = PowerSumElement()
    for i in range(1, top):
        di = ps_diff(F, i)
        for j in range(1, top - i + 1):
            s = i + j
            join = ps_mul(PowerSumElement.monomial(Partition((s,)), i * j), ps_diff(di, j))
            cut = ps_mul(PowerSumElement.monomial(Partition.from_parts((i, j)), s), ps_diff(F, s))
            out = out + join + cut
    return out


def cutjoin_quadratic(F: PowerSumElement, max_degree: int) -> PowerSumElement:
    """``sum over ordered (i, j) of ij p_{i+j} d_iF d_jF`` up to degree ``max_degree``."""
    out = PowerSumElement()
    firsts = {i: ps_diff(F, i) for i in range(1, max_degree)}
    for i in range(1, max_degree):
        for j in range(1, max_degree - i + 1):
            prod_ = firsts[i].mul(firsts[j], max_degree - i - j)
            out = out + ps_mul(PowerSumElement.monomial(Partition((i + j,)), i * j), prod_)
    return out


def _times_half_i_lambda(F: PowerSumElement) -> PowerSumElement:
    def f(c):
        if isinstance(c, LambdaSeries):
            return c.mul_lambda(1) * HALF_I
        raise TypeError("the flow acts on lambda-series coefficients")
    return F.map_coefficients(f)


def cutjoin_apply(F: PowerSumElement, connected: bool = False,
                  max_degree: int | None = None) -> PowerSumElement:
    """``(i lambda/2) A F``, plus the quadratic term when ``connected``."""
    out = cutjoin_operator(F)
    if connected:
        top = F.max_degree if max_degree is None else max_degree
        out = out + cutjoin_quadratic(F, top)
    return _times_half_i_lambda(out)


# ---------------------------------------------------------------------------
# matrix on a degree slice


@dataclass(frozen=True)
class CutJoinMatrix:
    """``A p_mu = sum_eta rows[eta][mu] p_eta`` on the reverse-lex basis."""

    d: int
    basis: tuple[Partition, ...]
    rows: tuple[tuple[int, ...], ...]

    def apply(self, vector):
        return [sum(r * v for r, v in zip(row, vector)) for row in self.rows]

    def entry(self, eta, mu) -> int:
        return self.rows[self.basis.index(Partition(eta))][self.basis.index(Partition(mu))]


def cutjoin_matrix(d: int) -> CutJoinMatrix:
    if d < 1:
        raise ValueError("d must be at least 1")
    basis = tuple(enumerate_partitions(d))
    index = {mu: k for k, mu in enumerate(basis)}
    rows = [[0] * len(basis) for _ in basis]
    for col, mu in enumerate(basis):
        for eta, c in _bare_on_monomial(mu).items():
            rows[index[eta]][col] += c
    return CutJoinMatrix(d, basis, tuple(tuple(r) for r in rows))


def eigen_check(d: int) -> VerificationReport:
    """``M v_nu = kappa_nu v_nu`` with ``v_nu = (chi_nu(mu)/z_mu)_mu``."""
    m = cutjoin_matrix(d)
    table = character_table(d)
    for nu in table.irreducibles:
        v = [Fraction(table[nu, mu], z(mu)) for mu in m.basis]
        mv = m.apply(v)
        k = kappa(nu)
        for eta, lhs, rhs in zip(m.basis, mv, v):
            if lhs != k * rhs:
                return fail(nu=list(nu), mu=list(eta), expected=rat(k * rhs), actual=rat(lhs))
    return PASS


# ---------------------------------------------------------------------------
# flow verification


def verify_cutjoin(d: int, lambda_order: int = 8, tau_degree: int = 6,
                   connected: bool = False) -> VerificationReport:
    """Exact check of the tau-flow on lambda exponents ``[-d, lambda_order)``
    and tau exponents ``<= tau_degree``."""
    cap = tau_degree + 1
    if connected:
        R = connected_series(d, lambda_order, cap)
    else:
        R = disconnected_series(d, lambda_order, cap)
    lhs = R.element.map_coefficients(lambda c: c.d_tau() if isinstance(c, LambdaSeries) else 0)
    rhs = cutjoin_apply(R.element, connected, d)
    expected = {mu: c for mu, c in lhs.terms.items() if isinstance(c, LambdaSeries)}
    actual = {mu: c for mu, c in rhs.terms.items() if mu.size <= d}
    return compare_series_maps(expected, actual, -d, lambda_order, tau_degree)


def ode_reconstruct(d: int, tau_degree: int, lambda_order: int, initial: dict | None = None):
    """Degree-``d`` slice from ``exp(tau (i lambda/2) M)`` applied to the tau = 0 vector.

    ``initial`` maps degree-``d`` partitions to tau-free series; by default it
    is the degree-``d`` part of ``exp`` of the closed-form initial condition.
    Returns ``{mu: LambdaSeries}`` with tau known to degree ``tau_degree``.
    """
    from .series import MVSeries

    m = cutjoin_matrix(d)
    if initial is None:
        initial = initial_disconnected(d, lambda_order).homogeneous(d).terms
    vec = [initial.get(mu) for mu in m.basis]
    vec = [LambdaSeries.zero(lambda_order) if c is None else c.truncate(lambda_order) for c in vec]
    acc = [c.with_tau_cap(tau_degree) for c in vec]
    cur = vec
    for k in range(1, tau_degree + 1):
        nxt = []
        for row in m.rows:
            s = None
            for coeff, c in zip(row, cur):
                if coeff:
                    t = c * coeff
                    s = t if s is None else s + t
            if s is None:
                s = LambdaSeries.zero(lambda_order)
            nxt.append((s.mul_lambda(1) * HALF_I).truncate(lambda_order))
        cur = nxt
        weight = (TAU ** k) * Fraction(1, factorial(k))
        acc = [a + c * weight for a, c in zip(acc, cur)]
    terms = {mu: a.with_tau_cap(tau_degree) for mu, a in zip(m.basis, acc)}
    return MVSeries(d, False, PowerSumElement(terms), lambda_order, tau_degree, True)


def verify_reconstruct(d: int, tau_degree: int = 8, lambda_order: int = 8,
                       initial: str = "closed-form") -> VerificationReport:
    """Reconstruction against the direct character sum on ``[-d, lambda_order)``."""
    direct = disconnected_series(d, lambda_order, tau_degree, homogeneous=True)
    if initial == "closed-form":
        start = None
    elif initial == "direct":
        start = {mu: c.evaluate_tau(0) for mu, c in direct.series_map().items()}
    else:
        raise ValueError(f"unknown initial vector source {initial!r}")
    rec = ode_reconstruct(d, tau_degree, lambda_order, start)
    return compare_series_maps(direct.series_map(), rec.series_map(), -d, lambda_order,
                               tau_degree)
