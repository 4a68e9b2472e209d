"""Exact scalar, polynomial and series arithmetic.

Everything here works over the Gaussian rationals Q(i).  The layers are

* :class:`GaussianRational` -- a + b*i with ``Fraction`` parts;
* :class:`Poly` -- dense univariate polynomial over Q(i).  Polynomials in the
  formal parameter tau are ``Poly`` objects (``TauPoly`` is an alias);
* :class:`LaurentPoly` / :class:`XLaurentRational` -- Laurent polynomials and
  their ratios in ``x``, where ``x`` stands for exp(i*lambda/2).  Sine
  products live here exactly: ``2 sin(k*lambda/2) = -i (x^k - x^-k)``;
* :class:`LambdaSeries` -- truncated Laurent series in lambda with ``Poly``
  coefficients and an explicit truncation window.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd
from numbers import Rational


class WindowError(ValueError):
    """A series operation cannot deliver the requested window."""


class DivisionRemainderError(ArithmeticError):
    """An exact division left a nonzero remainder."""


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class GaussianRational:
    """Exact complex rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value)
        if isinstance(value, complex):
            raise TypeError("floating point complex values are not exact")
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE_G, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ONE_G = GaussianRational(1)
I = GaussianRational(0, 1)


# ---------------------------------------------------------------------------
# polynomials over Q(i)


def _conv_into(out_re, out_im, xr, xi, yr, yi, shift, cap):
    """Accumulate (xr + i xi) * (yr + i yi), shifted by ``shift``, into out."""
    x_real = not any(xi)
    y_real = not any(yi)
    limit = len(out_re)
    if cap is not None:
        limit = min(limit, cap + 1)
    for j, a in enumerate(xr):
        if j + shift >= limit:
            break
        b = xi[j]
        if not a and not b:
            continue
        top = min(len(yr), limit - j - shift)
        base = j + shift
        if x_real or not b:
            if y_real:
                for k in range(top):
                    out_re[base + k] += a * yr[k]
            else:
                for k in range(top):
                    out_re[base + k] += a * yr[k]
                    out_im[base + k] += a * yi[k]
        elif not a:
            if y_real:
                for k in range(top):
                    out_im[base + k] += b * yr[k]
            else:
                for k in range(top):
                    out_re[base + k] -= b * yi[k]
                    out_im[base + k] += b * yr[k]
        else:
            for k in range(top):
                c, d = yr[k], yi[k]
                out_re[base + k] += a * c - b * d
                out_im[base + k] += a * d + b * c


class Poly:
    """Dense univariate polynomial over Q(i).

    Stored as a common positive denominator and integer numerators for the
    real and imaginary parts, fully reduced.  The zero polynomial has no
    coefficients and ``degree == -1``.
    """

    __slots__ = ("_re", "_im", "_den")

    def __init__(self, coeffs=()):
        gs = [GaussianRational.coerce(c) for c in coeffs]
        den = 1
        for c in gs:
            den = _lcm(den, c.re.denominator)
            den = _lcm(den, c.im.denominator)
        re = [c.re.numerator * (den // c.re.denominator) for c in gs]
        im = [c.im.numerator * (den // c.im.denominator) for c in gs]
        self._assign(re, im, den)

    @classmethod
    def _raw(cls, re, im, den) -> "Poly":
        p = object.__new__(cls)
        p._assign(re, im, den)
        return p

    def _assign(self, re, im, den):
        n = len(re)
        while n and not re[n - 1] and not im[n - 1]:
            n -= 1
        if n == 0:
            self._re, self._im, self._den = (), (), 1
            return
        re, im = re[:n], im[:n]
        if den < 0:
            den, re, im = -den, [-v for v in re], [-v for v in im]
        g = gcd(den, *re, *im)
        if g > 1:
            den //= g
            re = [v // g for v in re]
            im = [v // g for v in im]
        self._re, self._im, self._den = tuple(re), tuple(im), den

    @classmethod
    def constant(cls, value) -> "Poly":
        return cls((value,))

    @classmethod
    def coerce(cls, value) -> "Poly":
        if isinstance(value, Poly):
            return value
        return cls.constant(value)

    # -- inspection ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 as the sentinel for the zero polynomial."""
        return len(self._re) - 1

    @property
    def coeffs(self) -> tuple:
        d = self._den
        return tuple(GaussianRational(Fraction(a, d), Fraction(b, d))
                     for a, b in zip(self._re, self._im))

    def __getitem__(self, k: int) -> GaussianRational:
        if 0 <= k < len(self._re):
            return GaussianRational(Fraction(self._re[k], self._den),
                                    Fraction(self._im[k], self._den))
        return GaussianRational(0)

    def __bool__(self):
        return bool(self._re)

    @property
    def is_real(self) -> bool:
        return not any(self._im)

    @property
    def is_imaginary(self) -> bool:
        return not any(self._re)

    @property
    def is_constant(self) -> bool:
        return len(self._re) <= 1

    def real_part(self) -> "Poly":
        return Poly._raw(list(self._re), [0] * len(self._re), self._den)

    def imag_part(self) -> "Poly":
        return Poly._raw(list(self._im), [0] * len(self._im), self._den)

    def real_coefficients(self) -> list[Fraction]:
        if not self.is_real:
            raise ValueError("polynomial has a nonzero imaginary part")
        return [Fraction(a, self._den) for a in self._re]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self._den == other._den and self._re == other._re
                    and self._im == other._im)
        if isinstance(other, (int, Rational, GaussianRational)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self._re, self._im, self._den))

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                cs = f"({c})" if not (c.is_real or c.re == 0) else str(c)
                terms.append(cs if k == 0 else f"{cs}*t^{k}")
        return " + ".join(terms)

    # -- ring operations ----------------------------------------------------

    def __neg__(self):
        return Poly._raw([-v for v in self._re], [-v for v in self._im], self._den)

    def __add__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.constant(other)
            except TypeError:
                return NotImplemented
        if not other:
            return self
        if not self:
            return other
        d = _lcm(self._den, other._den)
        sa, sb = d // self._den, d // other._den
        n = max(len(self._re), len(other._re))
        re = [0] * n
        im = [0] * n
        for k, (a, b) in enumerate(zip(self._re, self._im)):
            re[k] = a * sa
            im[k] = b * sa
        for k, (a, b) in enumerate(zip(other._re, other._im)):
            re[k] += a * sb
            im[k] += b * sb
        return Poly._raw(re, im, d)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _scale(self, c: GaussianRational) -> "Poly":
        a, b = c.re, c.im
        # common denominator of the scalar parts
        den = _lcm(a.denominator, b.denominator)
        ar = a.numerator * (den // a.denominator)
        br = b.numerator * (den // b.denominator)
        re = [x * ar - y * br for x, y in zip(self._re, self._im)]
        im = [x * br + y * ar for x, y in zip(self._re, self._im)]
        return Poly._raw(re, im, self._den * den)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self._scale(GaussianRational.coerce(other))
            except TypeError:
                return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "Poly", cap: int | None = None) -> "Poly":
        """Product, optionally dropping every term of degree above ``cap``."""
        if not self or not other:
            return ZERO_POLY
        n = len(self._re) + len(other._re) - 1
        if cap is not None:
            n = min(n, cap + 1)
            if n <= 0:
                return ZERO_POLY
        re = [0] * n
        im = [0] * n
        _conv_into(re, im, self._re, self._im, other._re, other._im, 0, None)
        return Poly._raw(re, im, self._den * other._den)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = ONE_POLY, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def truncate(self, cap: int | None) -> "Poly":
        """Drop all terms of degree above ``cap``."""
        if cap is None or len(self._re) <= cap + 1:
            return self
        return Poly._raw(list(self._re[:cap + 1]), list(self._im[:cap + 1]), self._den)

    def derivative(self) -> "Poly":
        re = [k * a for k, a in enumerate(self._re)][1:]
        im = [k * b for k, b in enumerate(self._im)][1:]
        return Poly._raw(re, im, self._den)

    def evaluate(self, value):
        """Value at a Gaussian rational point (Horner)."""
        v = GaussianRational.coerce(value)
        acc = GaussianRational(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def shift(self, k: int) -> "Poly":
        """Multiply by ``var**k`` for k >= 0."""
        if k < 0:
            raise ValueError("negative shift")
        if not self:
            return self
        return Poly._raw([0] * k + list(self._re), [0] * k + list(self._im), self._den)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division over Q(i)."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        lead_inv = div[-1].inverse()
        dq = len(rem) - len(div) + 1
        if dq <= 0:
            return ZERO_POLY, self
        quot = [GaussianRational(0)] * dq
        for k in range(dq - 1, -1, -1):
            c = rem[k + len(div) - 1] * lead_inv
            quot[k] = c
            if c:
                for j, dc in enumerate(div):
                    rem[k + j] = rem[k + j] - c * dc
        return Poly(quot), Poly(rem[:len(div) - 1])

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise DivisionRemainderError(f"nonzero remainder {r} dividing {self} by {other}")
        return q


ZERO_POLY = Poly()
ONE_POLY = Poly((1,))
TAU = Poly((0, 1))

TauPoly = Poly


def tau_divide_exact(a, b):
    """Exact quotient ``a / b`` for a polynomial (or series coefficientwise).

    Raises :class:`DivisionRemainderError` when ``b`` does not divide ``a``.
    """
    b = Poly.coerce(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if isinstance(a, LambdaSeries):
        return LambdaSeries._from_polys(a.valuation, [c.exact_div(b) for c in a.coeffs],
                                        a.order, a.tau_cap)
    return Poly.coerce(a).exact_div(b)


# ---------------------------------------------------------------------------
# Laurent polynomials and rational functions in x


class LaurentPoly:
    """``x**shift * poly(x)`` with ``poly(0) != 0`` (unless zero)."""

    __slots__ = ("shift", "poly")

    def __init__(self, shift: int, poly: Poly):
        re, im = poly._re, poly._im
        j = 0
        while j < len(re) and not re[j] and not im[j]:
            j += 1
        if j == len(re):
            shift, poly = 0, ZERO_POLY
        elif j:
            shift, poly = shift + j, Poly._raw(list(re[j:]), list(im[j:]), poly._den)
        self.shift = shift
        self.poly = poly

    @classmethod
    def from_terms(cls, terms: dict) -> "LaurentPoly":
        terms = {e: GaussianRational.coerce(c) for e, c in terms.items() if c}
        if not terms:
            return cls(0, ZERO_POLY)
        lo, hi = min(terms), max(terms)
        return cls(lo, Poly([terms.get(e, 0) for e in range(lo, hi + 1)]))

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "LaurentPoly":
        return cls(exponent, Poly.constant(coeff))

    def terms(self) -> list[tuple[int, GaussianRational]]:
        return [(self.shift + k, c) for k, c in enumerate(self.poly.coeffs) if c]

    def __bool__(self):
        return bool(self.poly)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.shift == other.shift and self.poly == other.poly

    def __hash__(self):
        return hash((self.shift, self.poly))

    def __neg__(self):
        return LaurentPoly(self.shift, -self.poly)

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other:
            return self
        if not self:
            return other
        lo = min(self.shift, other.shift)
        return LaurentPoly(lo, self.poly.shift(self.shift - lo) + other.poly.shift(other.shift - lo))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return LaurentPoly(self.shift + other.shift, self.poly * other.poly)
        try:
            return LaurentPoly(self.shift, self.poly * GaussianRational.coerce(other))
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Substitute ``x -> x**k`` (k a nonzero integer)."""
        if k == 0:
            raise ValueError("substitution exponent must be nonzero")
        return LaurentPoly.from_terms({e * k: c for e, c in self.terms()})

    @property
    def leading(self) -> GaussianRational:
        return self.poly.coeffs[-1]

    def __repr__(self):
        return f"LaurentPoly({self.terms()})"


class XLaurentRational:
    """Ratio of Laurent polynomials in x, with x read as exp(i*lambda/2).

    Normal form: the denominator has lowest exponent 0 and leading
    coefficient 1.  Equality is tested by cross multiplication, so two
    representatives of the same rational function compare equal.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: LaurentPoly | None = None):
        if denominator is None:
            denominator = LaurentPoly.monomial(0)
        if not denominator:
            raise ZeroDivisionError("zero denominator")
        lead = denominator.leading.inverse()
        self.numerator = LaurentPoly(numerator.shift - denominator.shift, numerator.poly * lead)
        self.denominator = LaurentPoly(0, denominator.poly * lead)

    @classmethod
    def constant(cls, value) -> "XLaurentRational":
        return cls(LaurentPoly.monomial(0, value))

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> "XLaurentRational":
        return cls(LaurentPoly.monomial(exponent, coeff))

    @classmethod
    def sine_block(cls, k: int) -> "XLaurentRational":
        """``2 sin(k*lambda/2) = -i (x^k - x^-k)``."""
        return cls(LaurentPoly.from_terms({k: -I, -k: I}))

    def __mul__(self, other):
        if isinstance(other, XLaurentRational):
            return XLaurentRational(self.numerator * other.numerator,
                                    self.denominator * other.denominator)
        try:
            return XLaurentRational(self.numerator * GaussianRational.coerce(other),
                                    self.denominator)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "XLaurentRational":
        return XLaurentRational(self.denominator, self.numerator)

    def __truediv__(self, other):
        if not isinstance(other, XLaurentRational):
            other = XLaurentRational.constant(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return XLaurentRational.constant(other) * self.inverse()

    def __add__(self, other):
        if not isinstance(other, XLaurentRational):
            other = XLaurentRational.constant(other)
        if self.denominator == other.denominator:
            return XLaurentRational(self.numerator + other.numerator, self.denominator)
        return XLaurentRational(self.numerator * other.denominator + other.numerator * self.denominator,
                                self.denominator * other.denominator)

    __radd__ = __add__

    def __neg__(self):
        return XLaurentRational(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = XLaurentRational.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, XLaurentRational):
            try:
                other = XLaurentRational.constant(other)
            except TypeError:
                return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None

    def substitute_power(self, k: int) -> "XLaurentRational":
        return XLaurentRational(self.numerator.substitute_power(k),
                                self.denominator.substitute_power(k))

    def __repr__(self):
        return f"XLaurentRational({self.numerator!r}, {self.denominator!r})"


# ---------------------------------------------------------------------------
# truncated Laurent series in lambda


def _min_cap(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LambdaSeries:
    """Truncated Laurent series ``sum_k c_k lambda^k`` with ``Poly`` coefficients.

    ``coeffs[j]`` is the coefficient of ``lambda**(valuation + j)``; exponents
    ``>= order`` are unknown.  ``tau_cap``, when set, means the coefficients
    are only known modulo ``tau**(tau_cap + 1)``.  A series that vanishes on
    its whole window has ``valuation == order`` and no coefficients.
    """

    __slots__ = ("valuation", "order", "coeffs", "tau_cap")

    def __init__(self, start: int, coeffs=(), order: int | None = None,
                 tau_cap: int | None = None):
        polys = [Poly.coerce(c) for c in coeffs]
        if order is None:
            order = start + len(polys)
        self._set(start, polys, order, tau_cap)

    @classmethod
    def _from_polys(cls, start, polys, order, tau_cap) -> "LambdaSeries":
        s = object.__new__(cls)
        s._set(start, polys, order, tau_cap)
        return s

    def _set(self, start, polys, order, tau_cap):
        if tau_cap is not None:
            if tau_cap < 0:
                raise WindowError("empty tau window")
            polys = [p.truncate(tau_cap) for p in polys]
        n = max(0, order - start)
        polys = polys[:n]
        j = 0
        while j < len(polys) and not polys[j]:
            j += 1
        if j == len(polys):
            # zero on the whole window
            self.valuation, self.coeffs = order, ()
        else:
            polys = polys[j:]
            polys.extend([ZERO_POLY] * (n - j - len(polys)))
            self.valuation, self.coeffs = start + j, tuple(polys)
        self.order = order
        self.tau_cap = tau_cap

    @classmethod
    def constant(cls, value, order: int, tau_cap: int | None = None) -> "LambdaSeries":
        return cls(0, (value,), order, tau_cap)

    @classmethod
    def zero(cls, order: int, tau_cap: int | None = None) -> "LambdaSeries":
        return cls._from_polys(order, [], order, tau_cap)

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """True when every coefficient in the window vanishes."""
        return not self.coeffs

    def coefficient(self, k: int) -> Poly:
        if k >= self.order:
            raise WindowError(f"lambda^{k} is outside the window (order {self.order})")
        if k < self.valuation:
            return ZERO_POLY
        return self.coeffs[k - self.valuation]

    def __getitem__(self, k: int) -> Poly:
        return self.coefficient(k)

    def items(self):
        """(exponent, coefficient) pairs across the window, zeros included."""
        return [(self.valuation + j, c) for j, c in enumerate(self.coeffs)]

    @property
    def tau_degree(self) -> int:
        return max((c.degree for c in self.coeffs), default=-1)

    def __eq__(self, other):
        if not isinstance(other, LambdaSeries):
            return NotImplemented
        return (self.order == other.order and self.valuation == other.valuation
                and self.tau_cap == other.tau_cap and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self):
        cap = "" if self.tau_cap is None else f", tau_cap={self.tau_cap}"
        body = " + ".join(f"({c})*L^{k}" for k, c in self.items() if c) or "0"
        return f"LambdaSeries({body} + O(L^{self.order}){cap})"

    # -- window manipulation -----------------------------------------------

    def truncate(self, order: int) -> "LambdaSeries":
        if order > self.order:
            raise WindowError(f"cannot extend window from {self.order} to {order}")
        return LambdaSeries._from_polys(self.valuation, list(self.coeffs), order, self.tau_cap)

    def with_tau_cap(self, cap: int | None) -> "LambdaSeries":
        cap = _min_cap(self.tau_cap, cap)
        return LambdaSeries._from_polys(self.valuation, list(self.coeffs), self.order, cap)

    def mul_lambda(self, k: int) -> "LambdaSeries":
        """Multiply by ``lambda**k``."""
        return LambdaSeries._from_polys(self.valuation + k, list(self.coeffs),
                                        self.order + k, self.tau_cap)

    def d_tau(self) -> "LambdaSeries":
        """Coefficientwise derivative in tau."""
        cap = None if self.tau_cap is None else self.tau_cap - 1
        return LambdaSeries._from_polys(self.valuation, [c.derivative() for c in self.coeffs],
                                        self.order, cap)

    def evaluate_tau(self, value) -> "LambdaSeries":
        """Substitute a value for tau (only tau = 0 is allowed under a tau cap)."""
        value = GaussianRational.coerce(value)
        if self.tau_cap is not None and value:
            raise WindowError("cannot evaluate a tau-truncated series away from tau = 0")
        polys = [Poly.constant(c.evaluate(value)) for c in self.coeffs]
        return LambdaSeries._from_polys(self.valuation, polys, self.order, None)

    def map_coefficients(self, f) -> "LambdaSeries":
        return LambdaSeries._from_polys(self.valuation, [Poly.coerce(f(c)) for c in self.coeffs],
                                        self.order, self.tau_cap)

    # -- ring operations ----------------------------------------------------

    def __neg__(self):
        return LambdaSeries._from_polys(self.valuation, [-c for c in self.coeffs],
                                        self.order, self.tau_cap)

    def __add__(self, other):
        if not isinstance(other, LambdaSeries):
            try:
                c = Poly.coerce(other)
            except TypeError:
                return NotImplemented
            other = LambdaSeries._from_polys(0, [c], max(self.order, 1), None)
        order = min(self.order, other.order)
        start = min(self.valuation, other.valuation, order)
        polys = [ZERO_POLY] * (order - start)
        for s in (self, other):
            for j, c in enumerate(s.coeffs):
                k = s.valuation + j - start
                if k >= len(polys):
                    break
                polys[k] = polys[k] + c
        return LambdaSeries._from_polys(start, polys, order, _min_cap(self.tau_cap, other.tau_cap))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, LambdaSeries):
            return self + (-other)
        try:
            return self + (-Poly.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LambdaSeries):
            return self._mul_series(other)
        try:
            c = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        cap = self.tau_cap
        return LambdaSeries._from_polys(self.valuation, [p.mul(c, cap) for p in self.coeffs],
                                        self.order, cap)

    __rmul__ = __mul__

    def _mul_series(self, other: "LambdaSeries") -> "LambdaSeries":
        va, vb = self.valuation, other.valuation
        order = min(self.order + vb, other.order + va)
        cap = _min_cap(self.tau_cap, other.tau_cap)
        n = order - va - vb
        if n <= 0 or self.is_zero or other.is_zero:
            return LambdaSeries.zero(order, cap)
        a_den, a_re, a_im = _common_form(self.coeffs[:n])
        b_den, b_re, b_im = _common_form(other.coeffs[:n])
        width = cap + 1 if cap is not None else None
        out = []
        for m in range(n):
            lo = max(0, m - len(b_re) + 1)
            hi = min(m, len(a_re) - 1)
            size = 0
            for j in range(lo, hi + 1):
                size = max(size, len(a_re[j]) + len(b_re[m - j]) - 1)
            if width is not None:
                size = min(size, width)
            re = [0] * max(size, 0)
            im = [0] * max(size, 0)
            for j in range(lo, hi + 1):
                xr, yr = a_re[j], b_re[m - j]
                if xr and yr:
                    _conv_into(re, im, xr, a_im[j], yr, b_im[m - j], 0, None)
            out.append(Poly._raw(re, im, a_den * b_den))
        return LambdaSeries._from_polys(va + vb, out, order, cap)

    def inverse(self) -> "LambdaSeries":
        """Multiplicative inverse; the leading coefficient must be a nonzero constant."""
        if self.is_zero:
            raise WindowError("cannot invert a series that vanishes on its window")
        lead = self.coeffs[0]
        if not lead.is_constant:
            raise ValueError("leading coefficient must be constant in tau to invert")
        inv0 = lead[0].inverse()
        n = self.order - self.valuation
        cap = self.tau_cap
        a = self.coeffs
        b = [Poly.constant(inv0)]
        for m in range(1, n):
            acc = ZERO_POLY
            for k in range(1, m + 1):
                acc = acc + a[k].mul(b[m - k], cap)
            b.append(acc * (-inv0))
        return LambdaSeries._from_polys(-self.valuation, b, n - self.valuation, cap)

    def __truediv__(self, other):
        if isinstance(other, LambdaSeries):
            return self * other.inverse()
        try:
            c = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * c.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = None
        for _ in range(n):
            result = self if result is None else result * self
        if result is None:
            raise ValueError("zeroth power of a truncated series has no natural window")
        return result

    def exp(self) -> "LambdaSeries":
        """exp of a series with valuation >= 1."""
        if not self.is_zero and self.valuation < 1:
            raise ValueError("exp needs a series with positive valuation")
        n = self.order
        if n <= 0:
            raise WindowError("exp of a series with non-positive order")
        cap = self.tau_cap
        s = [self.coefficient(k) if k >= self.valuation else ZERO_POLY for k in range(n)]
        e = [ONE_POLY]
        for m in range(1, n):
            acc = ZERO_POLY
            for k in range(1, m + 1):
                if s[k]:
                    acc = acc + s[k].mul(e[m - k], cap) * k
            e.append(acc * Fraction(1, m))
        return LambdaSeries._from_polys(0, e, n, cap)

    def log(self) -> "LambdaSeries":
        """log of a series whose constant term is exactly 1."""
        if self.valuation != 0 or self.coeffs[0] != ONE_POLY:
            raise ValueError("log needs constant term exactly 1")
        n = self.order
        cap = self.tau_cap
        s = list(self.coeffs)
        out = [ZERO_POLY]
        for m in range(1, n):
            acc = s[m] * m
            for k in range(1, m):
                if out[k]:
                    acc = acc - out[k].mul(s[m - k], cap) * k
            out.append(acc * Fraction(1, m))
        return LambdaSeries._from_polys(0, out, n, cap)


def _common_form(polys):
    """Bring a run of polynomials to one denominator: (den, re-lists, im-lists)."""
    den = 1
    for p in polys:
        den = _lcm(den, p._den)
    re, im = [], []
    for p in polys:
        s = den // p._den
        if s == 1:
            re.append(p._re)
            im.append(p._im)
        else:
            re.append([v * s for v in p._re])
            im.append([v * s for v in p._im])
    return den, re, im


# ---------------------------------------------------------------------------
# building blocks


def sin_block(k: int, order: int) -> LambdaSeries:
    """Taylor series of ``2 sin(k*lambda/2)`` up to (excluding) ``lambda**order``."""
    if k <= 0:
        raise ValueError("sine block needs a positive integer k")
    coeffs = []
    for n in range(max(order, 1)):
        if n % 2 == 0:
            coeffs.append(0)
        else:
            m = (n - 1) // 2
            coeffs.append(Fraction((-1) ** m * k ** n, 4 ** m * factorial(n)))
    return LambdaSeries(0, coeffs[:max(order, 0)], order)


def exp_tau_lambda(c, order: int, tau_cap: int | None = None) -> LambdaSeries:
    """``exp(c * lambda)`` for a polynomial ``c`` in tau."""
    c = Poly.coerce(c)
    terms = [ONE_POLY]
    for n in range(1, order):
        terms.append(terms[-1].mul(c, tau_cap) * Fraction(1, n))
    return LambdaSeries._from_polys(0, terms[:max(order, 0)], order, tau_cap)


def series_exp_log(s: LambdaSeries, kind: str) -> LambdaSeries:
    if kind == "exp":
        return s.exp()
    if kind == "log":
        return s.log()
    raise ValueError(f"unknown kind {kind!r}")


def series_arith(a: LambdaSeries, b: LambdaSeries | None, kind: str) -> LambdaSeries:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "inv":
        return a.inverse()
    raise ValueError(f"unknown kind {kind!r}")


def _laurent_moments(lp: LaurentPoly, count: int) -> list[GaussianRational]:
    """``sum_e c_e e^n`` for n < count."""
    terms = lp.terms()
    powers = [GaussianRational.coerce(c) for _, c in terms]
    exps = [e for e, _ in terms]
    out = []
    for _ in range(count):
        out.append(sum(powers, GaussianRational(0)))
        powers = [p * e for p, e in zip(powers, exps)]
    return out


def _laurent_valuation(lp: LaurentPoly) -> int:
    terms = lp.terms()
    if not terms:
        raise WindowError("the zero Laurent polynomial has no valuation")
    for n, m in enumerate(_laurent_moments(lp, len(terms))):
        if m:
            return n
    raise AssertionError("Vandermonde bound violated")  # pragma: no cover


def _laurent_series(lp: LaurentPoly, order: int) -> LambdaSeries:
    moments = _laurent_moments(lp, max(order, 0))
    half_i = GaussianRational(0, Fraction(1, 2))
    coeffs = []
    scale = GaussianRational(1)
    for n, m in enumerate(moments):
        if n:
            scale = scale * half_i * Fraction(1, n)
        coeffs.append(m * scale)
    return LambdaSeries(0, coeffs, order)


def x_to_series(r: XLaurentRational, order: int) -> LambdaSeries:
    """Expand a rational function of ``x = exp(i*lambda/2)`` in lambda."""
    num, den = r.numerator, r.denominator
    if not den:
        raise WindowError("denominator vanishes")
    vd = _laurent_valuation(den)
    if not num:
        return LambdaSeries.zero(order)
    vn = _laurent_valuation(num)
    top = _laurent_series(num, order + vd)
    bottom = _laurent_series(den, max(order + 2 * vd - vn, vd + 1))
    result = top * bottom.inverse()
    if result.order < order:  # pragma: no cover - guarded by the window algebra
        raise WindowError("window too small")
    return result.truncate(order)
