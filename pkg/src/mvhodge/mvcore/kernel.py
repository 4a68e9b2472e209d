"""The linear system ``sum_{k=0}^{l} (r-k)^i a_{l-k}^k = 0`` for ``0 <= i < l``
and the derivative relations its kernel encodes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from ..encode import gauss, poly_json, rat
from ..exact import Poly
from .report import PASS, VerificationReport, fail


def nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel by exact reduced row echelon form."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -m[i][free]
        basis.append(v)
    return basis


def kernel_system(l: int, r: int) -> list[list[int]]:
    """Rows ``i = 0..l-1``, columns ``k = 0..l`` (unknown ``a_{l-k}^k``)."""
    return [[(r - k) ** i for k in range(l + 1)] for i in range(l)]


@dataclass(frozen=True)
class KernelReport:
    l: int
    r: int
    kernelDim: int
    kernelVector: tuple[Fraction, ...]

    @property
    def signed_binomial(self) -> bool:
        return self.kernelDim == 1 and list(self.kernelVector) == [
            (-1) ** k * comb(self.l, k) for k in range(self.l + 1)]

    def to_json(self) -> dict:
        return {"l": self.l, "r": self.r, "kernelDim": self.kernelDim,
                "kernelVector": [rat(x) for x in self.kernelVector]}


@lru_cache(maxsize=None)
def kernel_solver(l: int, r: int) -> KernelReport:
    if not 1 <= l <= r:
        raise ValueError("need 1 <= l <= r")
    basis = nullspace(kernel_system(l, r), l + 1)
    vec: tuple[Fraction, ...] = ()
    if len(basis) == 1:
        v = basis[0]
        vec = tuple(x / v[0] for x in v)
    return KernelReport(l, r, len(basis), vec)


def jk_from_seed(seed: Poly, r: int) -> dict[int, Poly]:
    """``J^k`` for ``k <= r`` from ``J^0 = seed``, coefficientwise through the kernel.

    Writing ``J^k = sum_j a_j^k tau^j``, the kernel for ``l = j + k`` gives
    ``a_j^k = (-1)^k binom(j+k, k) a_{j+k}^0``.
    """
    if seed.degree > r:
        raise ValueError("seed degree exceeds r")
    out = {}
    for k in range(r + 1):
        coeffs = []
        for j in range(r - k + 1):
            l = j + k
            if l == 0:
                w = Fraction(1)
            else:
                rep = kernel_solver(l, max(r, l))
                if rep.kernelDim != 1:
                    raise ArithmeticError(f"kernel of dimension {rep.kernelDim} at l={l}")
                # kernelVector[k] / kernelVector[0] = a_{l-k}^k / a_l^0
                w = rep.kernelVector[k]
            coeffs.append(seed[l] * w)
        out[k] = Poly(coeffs)
    return out


def jk_relation_check(r: int, seed: Poly) -> VerificationReport:
    """``J^k = ((-1)^k/k!) d^k J^0`` and ``deg J^k <= r - k`` for every ``k <= r``."""
    seed = Poly.coerce(seed)
    jk = jk_from_seed(seed, r)
    for k, p in jk.items():
        if p.degree > r - k:
            return fail(k=k, reason="degree", expected=r - k, actual=p.degree)
        d = seed
        for _ in range(k):
            d = d.derivative()
        expected = d * Fraction((-1) ** k, factorial(k))
        if p != expected:
            return fail(k=k, expected=poly_json(expected), actual=poly_json(p))
    # the defining linear system itself, one block per l
    for l in range(1, r + 1):
        vals = [jk[k][l - k] for k in range(l + 1)]
        for i in range(l):
            s = sum(((r - k) ** i) * v for k, v in enumerate(vals))
            if s != 0:
                return fail(l=l, i=i, expected=gauss(0), actual=gauss(s))
    return PASS
