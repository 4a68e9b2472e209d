"""The character-sum generating functions.

``R•_mu = sum_{|nu|=|mu|} chi_nu(mu)/z_mu * exp(i (tau+1/2) kappa_nu lambda/2) * V_nu(lambda)``
and ``R = log R•`` in the power-sum grading.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .._parallel import parallel_map
from ..characters import character_table
from ..exact import (GaussianRational, I, LambdaSeries, Poly, WindowError, XLaurentRational,
                     exp_tau_lambda, sin_block, x_to_series)
from ..partitions import EMPTY, Partition, kappa, partitions_up_to, z
from ..symfunc import PowerSumElement, graded_exp, graded_log
from .report import compare_series_maps


# ---------------------------------------------------------------------------
# V_nu


def v_exact(nu, form: str = "hook") -> XLaurentRational:
    """The sine product ``V_nu`` as an exact rational function of ``x``.

    ``form="product"`` follows the double product over rows; ``form="hook"``
    is ``1 / prod_{cells} 2 sin(h(e) lambda/2)``.
    """
    nu = Partition(nu)
    if nu.size < 1:
        raise ValueError("V_nu needs |nu| >= 1")
    block = XLaurentRational.sine_block
    r = XLaurentRational.constant(1)
    if form == "hook":
        for h in nu.hook_lengths():
            r = r / block(h)
    elif form == "product":
        l = len(nu)
        for a in range(l):
            for b in range(a + 1, l):
                r = r * block(nu[a] - nu[b] + b - a) / block(b - a)
        for i in range(l):
            for v in range(1, nu[i] + 1):
                r = r / block(v - (i + 1) + l)
    else:
        raise ValueError(f"unknown form {form!r}")
    return r


@lru_cache(maxsize=None)
def v_series(nu: Partition, order: int) -> LambdaSeries:
    return x_to_series(v_exact(nu, "hook"), order)


def v_series_from_blocks(nu, order: int) -> LambdaSeries:
    """``V_nu`` as a product of inverted sine blocks (second code path)."""
    nu = Partition(nu)
    hooks = nu.hook_lengths()
    n = len(hooks)
    # each inverse has valuation -1; widen so the product reaches ``order``
    inner = order + 2 * n
    out = None
    for h in hooks:
        term = sin_block(h, inner).inverse()
        out = term if out is None else out * term
    return out.truncate(order)


def exponent_coefficient(nu: Partition) -> Poly:
    """``i kappa_nu (tau + 1/2) / 2`` as a polynomial in tau."""
    k = kappa(nu)
    return Poly([GaussianRational(0, Fraction(k, 4)), GaussianRational(0, Fraction(k, 2))])


def weighted_term(args) -> LambdaSeries:
    """``exp(i (tau+1/2) kappa_nu lambda/2) * V_nu`` to the given order."""
    nu, order, tau_cap = args
    e = exp_tau_lambda(exponent_coefficient(nu), order + nu.size, tau_cap)
    return (e * v_series(nu, order)).truncate(order)


# ---------------------------------------------------------------------------
# containers and caching


@dataclass(frozen=True)
class MVSeries:
    """A generating function truncated in every direction.

    ``element`` maps partitions to ``LambdaSeries``.  When ``homogeneous`` it
    holds only the degree-``d`` slice; otherwise every degree ``<= d`` (and
    the constant 1 for the disconnected series).
    """

    d: int
    connected: bool
    element: PowerSumElement
    order: int
    tau_cap: int | None
    homogeneous: bool = False

    def __getitem__(self, mu) -> LambdaSeries:
        return self.element.terms[Partition(mu)]

    @property
    def window(self) -> tuple[int, int, int | None]:
        floor = -1 if self.connected else -self.d
        return floor, self.order, self.tau_cap

    def series_map(self) -> dict:
        return {mu: c for mu, c in self.element.terms.items() if mu}

    def restrict(self, d: int | None = None, order: int | None = None,
                 tau_cap: int | None = None, homogeneous: bool | None = None) -> "MVSeries":
        d = self.d if d is None else d
        order = self.order if order is None else order
        homogeneous = self.homogeneous if homogeneous is None else homogeneous
        if d > self.d or order > self.order or (homogeneous is False and self.homogeneous and d > 0):
            if not (self.homogeneous and homogeneous and d == self.d):
                raise WindowError("cannot widen a series by restriction")
        if tau_cap is None:
            tau_cap = self.tau_cap
        elif self.tau_cap is not None and tau_cap > self.tau_cap:
            raise WindowError("cannot raise the tau cap by restriction")
        terms = {}
        for mu, c in self.element.terms.items():
            if mu.size > d or (homogeneous and mu.size != d):
                continue
            if isinstance(c, LambdaSeries):
                if c.order != order:
                    c = c.truncate(order)
                if tau_cap != c.tau_cap:
                    c = c.with_tau_cap(tau_cap)
            terms[mu] = c
        return MVSeries(d, self.connected, PowerSumElement(terms), order, tau_cap, homogeneous)


class _SeriesCache:
    """Remembers built series and serves narrower requests by restriction."""

    def __init__(self):
        self._lock = threading.Lock()
        self._entries: list[MVSeries] = []

    def find(self, d, order, tau_cap, homogeneous) -> MVSeries | None:
        with self._lock:
            for s in self._entries:
                if s.order < order or s.d < d:
                    continue
                if s.homogeneous and not (homogeneous and s.d == d):
                    continue
                if s.tau_cap is not None and (tau_cap is None or s.tau_cap < tau_cap):
                    continue
                return s.restrict(d, order, tau_cap, homogeneous)
        return None

    def add(self, s: MVSeries):
        with self._lock:
            self._entries.append(s)

    def clear(self):
        with self._lock:
            self._entries.clear()


_disconnected_cache = _SeriesCache()
_connected_cache = _SeriesCache()


def clear_caches():
    _disconnected_cache.clear()
    _connected_cache.clear()
    v_series.cache_clear()


# ---------------------------------------------------------------------------
# builders


def disconnected_series(d: int, lambda_order: int, tau_degree: int | None = None,
                        homogeneous: bool = False) -> MVSeries:
    """``R•`` on all degrees ``<= d`` (or only degree ``d``)."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if lambda_order <= -d:
        raise WindowError(f"lambda order {lambda_order} cannot hold the valuation floor {-d}")
    hit = _disconnected_cache.find(d, lambda_order, tau_degree, homogeneous)
    if hit is not None:
        return hit
    terms: dict = {} if homogeneous else {EMPTY: 1}
    for k in ([d] if homogeneous else range(1, d + 1)):
        table = character_table(k)
        jobs = [(nu, lambda_order, tau_degree) for nu in table.irreducibles]
        weighted = dict(zip(table.irreducibles, parallel_map(weighted_term, jobs)))
        for mu in table.classes:
            acc = None
            zmu = z(mu)
            for nu in table.irreducibles:
                chi = table[nu, mu]
                if chi:
                    t = weighted[nu] * Fraction(chi, zmu)
                    acc = t if acc is None else acc + t
            terms[mu] = acc
    s = MVSeries(d, False, PowerSumElement(terms), lambda_order, tau_degree, homogeneous)
    _disconnected_cache.add(s)
    return s


def connected_series(d: int, lambda_order: int, tau_degree: int | None = None) -> MVSeries:
    """``R = log R•`` on all degrees ``<= d``.

    The disconnected input is built to order ``lambda_order + 2d`` and
    widened further if the logarithm still loses too much.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    hit = _connected_cache.find(d, lambda_order, tau_degree, False)
    if hit is not None:
        return hit
    inner = lambda_order + 2 * d
    while True:
        b = disconnected_series(d, inner, tau_degree).element
        a = graded_log(b, d)
        if all(c.order >= lambda_order for c in a.terms.values()):
            break
        inner += d  # pragma: no cover - the default margin has sufficed so far
    terms = {mu: c.truncate(lambda_order) for mu, c in a.terms.items()}
    s = MVSeries(d, True, PowerSumElement(terms), lambda_order, tau_degree)
    _connected_cache.add(s)
    return s


def _sub_multisets(parts: tuple[int, ...]):
    """Distinct nonempty sub-multisets of a decreasing tuple, with complements."""
    values = sorted(set(parts), reverse=True)
    counts = [parts.count(v) for v in values]

    def rec(i, chosen, rest):
        if i == len(values):
            if chosen:
                yield Partition.from_parts(chosen), Partition.from_parts(rest)
            return
        v, m = values[i], counts[i]
        for take in range(m + 1):
            yield from rec(i + 1, chosen + [v] * take, rest + [v] * (m - take))

    yield from rec(0, [], [])


def ordered_splits(mu: Partition, n: int):
    """Ordered n-tuples of nonempty partitions whose multiset union is ``mu``."""
    if n == 0:
        if not mu:
            yield ()
        return
    for first, rest in _sub_multisets(tuple(mu)):
        if len(rest) >= n - 1:
            for tail in ordered_splits(rest, n - 1):
                yield (first,) + tail


def connected_by_unions(d: int, lambda_order: int, tau_degree: int | None = None) -> dict:
    """``R_mu`` from the alternating sum over ordered unions ``mu^1 u ... u mu^n = mu``.

    Brute force, meant for small ``d`` only.
    """
    b = disconnected_series(d, lambda_order + 2 * d, tau_degree)
    out = {}
    for mu in partitions_up_to(d):
        total = None
        for n in range(1, len(mu) + 1):
            for tup in ordered_splits(mu, n):
                prod_ = None
                for nu in tup:
                    prod_ = b[nu] if prod_ is None else prod_ * b[nu]
                term = prod_ * Fraction((-1) ** (n - 1), n)
                total = term if total is None else total + term
        out[mu] = total.truncate(lambda_order)
    return out


# ---------------------------------------------------------------------------
# initial condition


def initial_closed_form(d: int, lambda_order: int) -> PowerSumElement:
    """``-sum_n i^{n+1} p_n / (2 n sin(n lambda/2))`` for ``n <= d``."""
    terms = {}
    for n in range(1, d + 1):
        c = -(I ** (n + 1)) * Fraction(1, n)
        terms[Partition((n,))] = sin_block(n, lambda_order + 2).inverse() * c
    return PowerSumElement(terms)


def initial_check(d: int, lambda_order: int):
    """Connected series at ``tau = 0`` against the closed form."""
    r = connected_series(d, lambda_order, tau_degree=0)
    actual = {mu: c.evaluate_tau(0) for mu, c in r.series_map().items()}
    expected = {mu: c.truncate(lambda_order)
                for mu, c in initial_closed_form(d, lambda_order).terms.items()}
    lo = min([-1] + [c.valuation for c in actual.values()])
    return compare_series_maps(expected, actual, lo, lambda_order, None)


def initial_disconnected(d: int, lambda_order: int) -> PowerSumElement:
    """``exp`` of the closed-form initial condition, degrees ``<= d``."""
    inner = lambda_order + 2 * d
    e = graded_exp(initial_closed_form(d, inner), d)
    return PowerSumElement({mu: (c.truncate(lambda_order) if mu else c)
                            for mu, c in e.terms.items()})
