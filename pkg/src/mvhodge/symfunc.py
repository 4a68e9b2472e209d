"""The power-sum ring Q[p1, p2, ...] and Schur-function identities.

:class:`PowerSumElement` is generic in its coefficients: plain rationals for
Schur expansions, :class:`~mvhodge.exact.LambdaSeries` for the generating
functions.  Coefficients only need ``+``, ``*`` and multiplication by
``Fraction``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from .characters import character_table, mn_character
from .exact import I, LaurentPoly, Poly, XLaurentRational
from .partitions import EMPTY, Partition, enumerate_partitions, kappa, n_stat, z


def _is_zero(c) -> bool:
    # LambdaSeries never compare equal to 0: a coefficient known to vanish
    # only up to some order is still information.
    try:
        return c == 0
    except TypeError:  # pragma: no cover
        return False


class PowerSumElement:
    """Finitely supported map ``Partition -> coefficient`` (``sum c_mu p_mu``)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mu, c in (terms or {}).items():
            if not _is_zero(c):
                clean[Partition(mu)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, mu, coeff=1) -> "PowerSumElement":
        return cls({Partition(mu): coeff})

    @classmethod
    def p(cls, i: int) -> "PowerSumElement":
        return cls.monomial((i,))

    def __getitem__(self, mu):
        return self.terms.get(Partition(mu), 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, PowerSumElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({c})*p{list(mu)}" for mu, c in self.sorted_items())
        return f"PowerSumElement({body or '0'})"

    def sorted_items(self):
        """Terms ordered by degree, then reverse-lex within a degree."""
        return sorted(self.terms.items(), key=lambda t: (t[0].size, tuple(-p for p in t[0])))

    # -- grading ------------------------------------------------------------

    def homogeneous(self, d: int) -> "PowerSumElement":
        return PowerSumElement({mu: c for mu, c in self.terms.items() if mu.size == d})

    def truncate(self, max_degree: int) -> "PowerSumElement":
        return PowerSumElement({mu: c for mu, c in self.terms.items() if mu.size <= max_degree})

    @property
    def max_degree(self) -> int:
        return max((mu.size for mu in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get(EMPTY, 0)

    def map_coefficients(self, f) -> "PowerSumElement":
        return PowerSumElement({mu: f(c) for mu, c in self.terms.items()})

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, PowerSumElement):
            other = PowerSumElement.monomial(EMPTY, other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out[mu] + c if mu in out else c
        return PowerSumElement(out)

    __radd__ = __add__

    def __neg__(self):
        return PowerSumElement({mu: -c for mu, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PowerSumElement):
            return self.mul(other)
        return PowerSumElement({mu: c * other for mu, c in self.terms.items()})

    def __rmul__(self, other):
        return PowerSumElement({mu: other * c for mu, c in self.terms.items()})

    def mul(self, other: "PowerSumElement", max_degree: int | None = None) -> "PowerSumElement":
        """Product, optionally dropping monomials of degree above ``max_degree``."""
        out: dict = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                if max_degree is not None and mu.size + nu.size > max_degree:
                    continue
                key = Partition.from_parts(mu + nu)
                prod_ = a * b
                out[key] = out[key] + prod_ if key in out else prod_
        return PowerSumElement(out)

    def diff(self, i: int) -> "PowerSumElement":
        """Partial derivative with respect to ``p_i``."""
        if i < 1:
            raise ValueError("power sums are indexed from 1")
        out = {}
        for mu, c in self.terms.items():
            m = mu.count(i)
            if m:
                out[mu.remove(i)] = c * m
        return PowerSumElement(out)


def ps_mul(a: PowerSumElement, b: PowerSumElement) -> PowerSumElement:
    return a * b


def ps_diff(a: PowerSumElement, i: int) -> PowerSumElement:
    return a.diff(i)


def _components(a: PowerSumElement, max_degree: int) -> list[PowerSumElement]:
    return [a.homogeneous(k) for k in range(max_degree + 1)]


def graded_exp(a: PowerSumElement, max_degree: int) -> PowerSumElement:
    """``exp(a)`` up to weighted degree ``max_degree``; ``a`` has no constant term.

    Uses the Euler-operator recurrence ``d*b_d = sum_k k*a_k*b_{d-k}``, so
    at degree d only finitely many products appear.
    """
    if EMPTY in a.terms:
        raise ValueError("graded_exp needs a vanishing constant term")
    parts = _components(a, max_degree)
    b = [PowerSumElement.monomial(EMPTY, 1)]
    for d in range(1, max_degree + 1):
        acc = PowerSumElement()
        for k in range(1, d + 1):
            if parts[k].terms and b[d - k].terms:
                acc = acc + (parts[k] * b[d - k]) * Fraction(k, d)
        b.append(acc)
    total = PowerSumElement()
    for comp in b:
        total = total + comp
    return total


def graded_log(b: PowerSumElement, max_degree: int) -> PowerSumElement:
    """``log(b)`` up to weighted degree ``max_degree``; ``b`` has constant term 1."""
    if b.constant_term() != 1:
        raise ValueError("graded_log needs constant term exactly 1")
    parts = _components(b, max_degree)
    a = [PowerSumElement()]
    for d in range(1, max_degree + 1):
        acc = parts[d]
        for k in range(1, d):
            if a[k].terms and parts[d - k].terms:
                acc = acc - (a[k] * parts[d - k]) * Fraction(k, d)
        a.append(acc)
    total = PowerSumElement()
    for comp in a[1:]:
        total = total + comp
    return total


def schur_expand(nu) -> PowerSumElement:
    """``s_nu = sum_eta chi_nu(eta)/z_eta p_eta``."""
    nu = Partition(nu)
    if not nu:
        return PowerSumElement.monomial(EMPTY, 1)
    table = character_table(nu.size)
    return PowerSumElement({eta: Fraction(table[nu, eta], z(eta)) for eta in table.classes})


# ---------------------------------------------------------------------------
# polynomials in finitely many commuting variables (oracle side)


class MPoly:
    """Sparse polynomial: ``{exponent tuple: Fraction}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, nvars: int) -> "MPoly":
        return cls(nvars, {(0,) * nvars: Fraction(1)})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "MPoly":
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): Fraction(1)})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    def __sub__(self, other):
        return self + other * Fraction(-1)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return MPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "MPoly", bound=None) -> "MPoly":
        """Product; ``bound(exponent) -> bool`` can veto monomials."""
        out: dict = defaultdict(Fraction)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if bound is None or bound(e):
                    out[e] += c1 * c2
        return MPoly(self.nvars, out)

    def __pow__(self, n: int):
        result = MPoly.one(self.nvars)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"MPoly({self.nvars}, {dict(sorted(self.terms.items()))})"


def power_sum_poly(k: int, nvars: int, offset: int = 0, total: int | None = None) -> MPoly:
    """``p_k`` in variables ``offset .. offset+nvars-1`` of a ``total``-variable ring."""
    total = nvars if total is None else total
    out = MPoly(total)
    for i in range(nvars):
        out = out + MPoly.var(total, offset + i, k)
    return out


def evaluate_power_sums(f: PowerSumElement, nvars: int, offset: int = 0,
                        total: int | None = None) -> MPoly:
    """Substitute ``p_k = x_1^k + ... + x_n^k`` into a rational ``PowerSumElement``."""
    total = nvars if total is None else total
    cache = {}
    out = MPoly(total)
    for mu, c in f.terms.items():
        term = MPoly.one(total) * Fraction(c)
        for k in mu:
            if k not in cache:
                cache[k] = power_sum_poly(k, nvars, offset, total)
            term = term * cache[k]
        out = out + term
    return out


def semistandard_tableaux(shape, nvars: int):
    """Yield semistandard fillings of ``shape`` with entries in ``0..nvars-1``."""
    shape = Partition(shape)
    cells = list(shape.cells())

    def fill(k, grid):
        if k == len(cells):
            yield dict(grid)
            return
        i, j = cells[k]
        lo = 0
        if j > 0:
            lo = max(lo, grid[i, j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1, j] + 1)
        for v in range(lo, nvars):
            grid[i, j] = v
            yield from fill(k + 1, grid)
        grid.pop((i, j), None)

    yield from fill(0, {})


def schur_tableaux_oracle(nu, nvars: int) -> MPoly:
    """``s_nu(x_1..x_n)`` as a sum over semistandard tableaux."""
    nu = Partition(nu)
    if nvars < nu.length:
        raise ValueError("need at least l(nu) variables")
    out: dict = defaultdict(Fraction)
    for t in semistandard_tableaux(nu, nvars):
        e = [0] * nvars
        for v in t.values():
            e[v] += 1
        out[tuple(e)] += 1
    return MPoly(nvars, out)


def principal_specialization(nu) -> XLaurentRational:
    """``s_nu(1, q, q^2, ...) = q^{n(nu)} / prod_e (1 - q^{h(e)})`` in the variable q."""
    nu = Partition(nu)
    den = LaurentPoly.monomial(0)
    for h in nu.hook_lengths():
        den = den * LaurentPoly.from_terms({0: 1, h: -1})
    return XLaurentRational(LaurentPoly.monomial(n_stat(nu)), den)


def principal_specialization_via_power_sums(nu) -> XLaurentRational:
    """Same specialization computed from ``s_nu = sum chi/z p_eta`` and
    ``p_k(1, q, q^2, ...) = 1/(1 - q^k)``, over one common denominator."""
    nu = Partition(nu)
    d = nu.size
    # every prod_i (1 - q^{eta_i}) divides prod_k (1 - q^k)^{floor(d/k)}
    factors = {k: Poly([1] + [0] * (k - 1) + [-1]) for k in range(1, d + 1)}
    common = Poly((1,))
    for k, f in factors.items():
        common = common * f ** (d // k)
    numerator = Poly()
    for eta in enumerate_partitions(d):
        chi = mn_character(nu, eta)
        if not chi:
            continue
        cofactor = Poly((1,))
        for k, f in factors.items():
            cofactor = cofactor * f ** (d // k - eta.count(k))
        numerator = numerator + cofactor * Fraction(chi, z(eta))
    return XLaurentRational(LaurentPoly(0, numerator), LaurentPoly(0, common))


def key_identity_check(rho) -> bool:
    """``t^n q^{n(rho)} / prod(1 - q^h)`` equals ``exp(i kappa lambda/4) / prod 2 sin(h lambda/2)``
    under ``q = exp(-i lambda)``, ``t = i q^{1/2}``; i.e. ``q = x^-2``, ``t = i x^-1``."""
    rho = Partition(rho)
    lhs = principal_specialization(rho).substitute_power(-2)
    lhs = lhs * XLaurentRational.monomial(-rho.size, I ** rho.size)
    rhs = XLaurentRational.monomial(kappa(rho) // 2)
    for h in rho.hook_lengths():
        rhs = rhs / XLaurentRational.sine_block(h)
    return lhs == rhs


def cauchy_check(d: int, nvars: int, q_order: int = 8) -> bool:
    """t^d coefficient of the Cauchy identity, and of its specialization y_j = q^{j-1}.

    The second part compares ``sum_rho s_rho(x) s_rho(1, q, q^2, ...)`` with
    ``prod_{i,j} 1/(1 - t x_i q^{j-1})`` as polynomials in x truncated below
    ``q^q_order``.
    """
    if d < 0 or nvars < 1:
        raise ValueError("need d >= 0 and nvars >= 1")
    rhos = enumerate_partitions(d)
    n2 = 2 * nvars
    # sum_rho s_rho(x) s_rho(y)
    lhs = MPoly(n2)
    for rho in rhos:
        s = schur_expand(rho)
        lhs = lhs + evaluate_power_sums(s, nvars, 0, n2) * evaluate_power_sums(s, nvars, nvars, n2)
    # prod_{i,j} sum_k (x_i y_j)^k, keeping x-degree <= d
    x_deg = lambda e: sum(e[:nvars]) <= d  # noqa: E731
    rhs = MPoly.one(n2)
    for i in range(nvars):
        for j in range(nvars):
            geo = MPoly(n2)
            for k in range(d + 1):
                geo = geo + MPoly.var(n2, i, k) * MPoly.var(n2, nvars + j, k)
            rhs = rhs.mul(geo, x_deg)
    rhs = MPoly(n2, {e: c for e, c in rhs.terms.items() if sum(e[:nvars]) == d})
    if lhs != rhs:
        return False

    # specialization: variables x_1..x_n, q (last)
    nq = nvars + 1
    within = lambda e: sum(e[:nvars]) <= d and e[nvars] < q_order  # noqa: E731
    spec_lhs = MPoly(nq)
    for rho in rhos:
        s_x = evaluate_power_sums(schur_expand(rho), nvars, 0, nq)
        spec_lhs = spec_lhs + s_x.mul(_q_series(principal_specialization(rho), q_order, nq), within)
    spec_rhs = MPoly.one(nq)
    for i in range(nvars):
        for j in range(q_order):
            geo = MPoly(nq)
            for k in range(d + 1):
                if j * k < q_order:
                    geo = geo + MPoly.var(nq, i, k) * MPoly.var(nq, nvars, j * k)
            spec_rhs = spec_rhs.mul(geo, within)
    spec_rhs = MPoly(nq, {e: c for e, c in spec_rhs.terms.items() if sum(e[:nvars]) == d})
    return spec_lhs == spec_rhs


def _q_series(r: XLaurentRational, order: int, nvars: int) -> MPoly:
    """Power series of a rational function of q (denominator constant term
    nonzero), as an MPoly in the last variable, truncated below ``q^order``."""
    num, den = r.numerator, r.denominator
    if num.shift < 0:
        raise ValueError("numerator has negative powers of q")
    d = den.poly.coeffs
    n = num.poly.coeffs
    inv0 = d[0].inverse()
    series = []
    for k in range(order):
        acc = n[k - num.shift] if 0 <= k - num.shift < len(n) else 0
        for j in range(1, min(k, len(d) - 1) + 1):
            acc = acc - d[j] * series[k - j]
        series.append(acc * inv0)
    out = {}
    for k, c in enumerate(series):
        if c:
            if not c.is_real:
                raise ValueError("expected a real q-series")
            e = [0] * nvars
            e[-1] = k
            out[tuple(e)] = c.re
    return MPoly(nvars, out)


def schur_oracle_agrees(nu, nvars: int | None = None) -> bool:
    nu = Partition(nu)
    nvars = max(nu.length, nu.size) if nvars is None else nvars
    return evaluate_power_sums(schur_expand(nu), nvars) == schur_tableaux_oracle(nu, nvars)
