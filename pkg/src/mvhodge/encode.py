"""JSON encodings.  Rationals always travel as ``"num/den"`` strings."""

from __future__ import annotations

import json
from fractions import Fraction

from .exact import GaussianRational, LambdaSeries, Poly

SAFE_INT = 2 ** 53


def rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def gauss(x) -> list[str]:
    x = GaussianRational.coerce(x)
    return [rat(x.re), rat(x.im)]


def poly_json(p: Poly) -> list[list[str]]:
    return [gauss(c) for c in p.coeffs]


def series_json(s: LambdaSeries) -> dict:
    return {"valuation": s.valuation, "order": s.order,
            "coeffs": [poly_json(c) for c in s.coeffs]}


def coefficient_json(c):
    if isinstance(c, LambdaSeries):
        return series_json(c)
    if isinstance(c, Poly):
        return poly_json(c)
    return gauss(c)


def element_json(element) -> list[dict]:
    return [{"mu": list(mu), "coeff": coefficient_json(c)} for mu, c in element.sorted_items()]


def mvseries_json(s) -> dict:
    floor, order, cap = s.window
    return {"d": s.d, "connected": s.connected, "homogeneous": s.homogeneous,
            "window": {"valuationFloor": floor, "order": order, "tauCap": cap},
            "terms": element_json(s.element)}


def hodge_json(h) -> dict:
    return {"g": h.g, "mu": list(h.mu), "H": [rat(c) for c in h.coefficients]}


def table_int(n: int):
    return n if -SAFE_INT < n < SAFE_INT else str(n)


def table_json(t) -> dict:
    return {"d": t.d,
            "irreducibles": [list(nu) for nu in t.irreducibles],
            "classes": [list(mu) for mu in t.classes],
            "values": [[table_int(v) for v in row] for row in t.values]}


def report_json(r) -> dict:
    return r.to_json()


def dumps(obj) -> str:
    """Deterministic serialization (fixed key order, fixed separators)."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": ")) + "\n"
