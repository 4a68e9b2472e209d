"""Verification reports with a first-failure locator."""

from __future__ import annotations

from dataclasses import dataclass

from ..encode import gauss
from ..exact import WindowError, ZERO_POLY
from ..partitions import Partition


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    first_failure: dict | None = None

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {"pass": self.passed, "firstFailure": self.first_failure}


PASS = VerificationReport(True)


def fail(**locator) -> VerificationReport:
    return VerificationReport(False, locator)


def _order_key(mu: Partition):
    return (mu.size, tuple(-p for p in mu))


def compare_series_maps(expected: dict, actual: dict, lo: int, hi: int,
                        tau_max: int | None = None) -> VerificationReport:
    """Compare two ``Partition -> LambdaSeries`` maps on lambda exponents
    ``lo <= k < hi`` and tau exponents ``<= tau_max``.

    A partition missing from one side counts as an exact zero there.  Both
    sides must actually know every coefficient in the window.
    """
    for mu in sorted(set(expected) | set(actual), key=_order_key):
        e, a = expected.get(mu), actual.get(mu)
        for s in (e, a):
            if s is not None and s.order < hi:
                raise WindowError(f"series for {list(mu)} known only below lambda^{s.order}, need {hi}")
        for k in range(lo, hi):
            ce = e.coefficient(k) if e is not None else ZERO_POLY
            ca = a.coefficient(k) if a is not None else ZERO_POLY
            if ce == ca:
                continue
            top = max(ce.degree, ca.degree)
            if tau_max is not None:
                top = min(top, tau_max)
            for t in range(top + 1):
                if ce[t] != ca[t]:
                    return fail(mu=list(mu), lambdaExp=k, tauExp=t,
                                expected=gauss(ce[t]), actual=gauss(ca[t]))
    return PASS
