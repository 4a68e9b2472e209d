"""Command-line front end.

Exit status is 0 on success or a passing verification, 1 on a failing
verification (the first failing coordinate is printed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys

from . import encode
from .characters import character_table
from .exact import WindowError
from .mvcore.cutjoin import eigen_check, ode_reconstruct, verify_cutjoin, verify_reconstruct
from .mvcore.hodge import IdentityViolation, hodge_extract
from .mvcore.kernel import kernel_solver
from .mvcore.report import PASS, VerificationReport, fail
from .mvcore.series import connected_series, disconnected_series, initial_check, v_exact
from .partitions import MAX_SIZE, Partition, hook_sum_identity_check, partitions_up_to
from .symfunc import (cauchy_check, principal_specialization,
                      principal_specialization_via_power_sums, schur_oracle_agrees)

VERIFY_TARGETS = ("cut-and-join", "initial", "schur", "cauchy", "hooks", "eigen",
                  "kernel", "reconstruct", "v-forms")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# verify targets


def _each(items, check, label):
    for x in items:
        if not check(x):
            return fail(**{label: list(x) if isinstance(x, Partition) else x})
    return PASS


def _nonempty_up_to(d):
    return [mu for mu in partitions_up_to(d) if mu]


def _verify_schur(a):
    r = _each(_nonempty_up_to(a.d), schur_oracle_agrees, "nu")
    if not r:
        return VerificationReport(False, dict(r.first_failure, check="tableaux"))
    r = _each(_nonempty_up_to(a.d),
              lambda nu: principal_specialization(nu) == principal_specialization_via_power_sums(nu),
              "nu")
    if not r:
        return VerificationReport(False, dict(r.first_failure, check="principal-specialization"))
    return PASS


def _verify_kernel(a):
    l = a.l if a.l is not None else a.d
    r = a.r if a.r is not None else l
    if not 1 <= l <= r:
        raise UsageError("kernel needs 1 <= l <= r")
    rep = kernel_solver(l, r)
    if rep.signed_binomial:
        return PASS
    return fail(l=l, r=r, kernelDim=rep.kernelDim,
                kernelVector=[encode.rat(x) for x in rep.kernelVector])


def _verify(a) -> VerificationReport:
    t = a.target
    if t == "cut-and-join":
        return verify_cutjoin(a.d, a.lambda_order, a.tau_degree, a.connected)
    if t == "initial":
        return initial_check(a.d, a.lambda_order)
    if t == "schur":
        return _verify_schur(a)
    if t == "cauchy":
        return _each(range(a.d + 1), lambda k: cauchy_check(k, a.nvars), "d")
    if t == "hooks":
        return _each(_nonempty_up_to(a.d), hook_sum_identity_check, "rho")
    if t == "eigen":
        return eigen_check(a.d)
    if t == "kernel":
        return _verify_kernel(a)
    if t == "reconstruct":
        return verify_reconstruct(a.d, a.tau_degree, a.lambda_order)
    if t == "v-forms":
        return _each(_nonempty_up_to(a.d),
                     lambda nu: v_exact(nu, "product") == v_exact(nu, "hook"), "nu")
    raise UsageError(f"unknown verify target {t!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# text rendering


def _text_series_map(items) -> str:
    lines = []
    for mu, c in items:
        lines.append(f"p{list(mu)}: {c}")
    return "\n".join(lines) + "\n"


def _text_report(r: VerificationReport) -> str:
    if r.passed:
        return "PASS\n"
    loc = ", ".join(f"{k}={v}" for k, v in sorted(r.first_failure.items()))
    return f"FAIL {loc}\n"


# ---------------------------------------------------------------------------
# commands


def _run(a) -> tuple[str, int]:
    js = a.format == "json"
    cmd = a.command
    if cmd == "chartable":
        t = character_table(a.d)
        if js:
            return encode.dumps(encode.table_json(t)), 0
        width = max(len(str(v)) for row in t.values for v in row) + 1
        head = "classes: " + " ".join(",".join(map(str, mu)) for mu in t.classes)
        rows = [",".join(map(str, nu)).ljust(12) + "".join(str(v).rjust(width) for v in row)
                for nu, row in zip(t.irreducibles, t.values)]
        return "\n".join([head] + rows) + "\n", 0
    if cmd == "series":
        build = connected_series if a.connected else disconnected_series
        s = build(a.d, a.lambda_order, a.tau_degree)
        if js:
            return encode.dumps(encode.mvseries_json(s)), 0
        return _text_series_map(s.element.sorted_items()), 0
    if cmd == "verify":
        r = _verify(a)
        out = encode.dumps(r.to_json()) if js else _text_report(r)
        return out, 0 if r.passed else 1
    if cmd == "hodge":
        try:
            h = hodge_extract(a.g, a.mu, a.lambda_order)
        except IdentityViolation as e:
            r = VerificationReport(False, dict(e.locator, error=str(e)))
            return (encode.dumps(r.to_json()) if js else _text_report(r)), 1
        if js:
            return encode.dumps(encode.hodge_json(h)), 0
        return f"H_{{{a.g},{list(a.mu)}}}(tau) = {h.H}\n", 0
    if cmd == "reconstruct":
        s = ode_reconstruct(a.d, a.tau_degree, a.lambda_order)
        if js:
            return encode.dumps(encode.mvseries_json(s)), 0
        return _text_series_map(s.element.sorted_items()), 0
    if cmd == "kernel":
        if a.l is None or a.r is None:
            raise UsageError("kernel needs --l and --r")
        if not 1 <= a.l <= a.r:
            raise UsageError("kernel needs 1 <= l <= r")
        rep = kernel_solver(a.l, a.r)
        if js:
            return encode.dumps(rep.to_json()), 0 if rep.kernelDim == 1 else 1
        vec = " ".join(encode.rat(x) for x in rep.kernelVector)
        return f"l={rep.l} r={rep.r} kernelDim={rep.kernelDim} vector: {vec}\n", \
            0 if rep.kernelDim == 1 else 1
    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# argument parsing


def _partition_arg(text: str) -> Partition:
    try:
        mu = Partition.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None
    if not mu:
        raise argparse.ArgumentTypeError("partition must be nonempty")
    return mu


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, default=None, help="degree |mu|")
    common.add_argument("--g", type=int, default=None, help="genus")
    common.add_argument("--mu", type=_partition_arg, default=None,
                        help="partition as comma-separated decreasing parts, e.g. 2,1")
    common.add_argument("--lambda-order", type=int, default=8,
                        help="lambda exponents below this are computed (default 8)")
    common.add_argument("--tau-degree", type=int, default=6,
                        help="tau exponents up to this are kept (default 6)")
    common.add_argument("--connected", action="store_true", help="use the connected series")
    common.add_argument("--l", type=int, default=None, help="kernel system size")
    common.add_argument("--r", type=int, default=None, help="kernel exponent base")
    common.add_argument("--nvars", type=int, default=3, help="variables for the Cauchy check")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", default=None, help="write output to this file")

    p = argparse.ArgumentParser(prog="mvhodge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("chartable", parents=[common], help="character table of S_d")
    sub.add_parser("series", parents=[common], help="generating series up to degree d")
    v = sub.add_parser("verify", parents=[common], help="run an exact identity check")
    v.add_argument("target", choices=VERIFY_TARGETS)
    sub.add_parser("hodge", parents=[common], help="extract H_{g,mu}(tau)")
    sub.add_parser("reconstruct", parents=[common], help="degree-d slice from the tau flow")
    sub.add_parser("kernel", parents=[common], help="kernel of the derivative-relation system")
    return p


def _validate(a):
    needs_d = a.command in ("chartable", "series", "reconstruct") or (
        a.command == "verify" and a.target != "kernel")
    if needs_d and a.d is None:
        raise UsageError("--d is required")
    if a.d is not None and not 1 <= a.d <= MAX_SIZE:
        raise UsageError(f"--d must lie in 1..{MAX_SIZE}")
    if a.command == "verify" and a.target == "kernel" and a.d is None and a.l is None:
        raise UsageError("kernel verification needs --l (or --d)")
    if a.command == "hodge":
        if a.g is None or a.mu is None:
            raise UsageError("hodge needs --g and --mu")
        if a.g < 0:
            raise UsageError("--g must be nonnegative")
        if a.mu.size > MAX_SIZE:
            raise UsageError(f"|mu| must be at most {MAX_SIZE}")
        k = 2 * a.g - 2 + len(a.mu)
        if not a.explicit_lambda_order:
            a.lambda_order = k + 1
    if a.tau_degree < 0:
        raise UsageError("--tau-degree must be nonnegative")
    if a.nvars < 1:
        raise UsageError("--nvars must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    a.explicit_lambda_order = "--lambda-order" in argv or any(
        x.startswith("--lambda-order=") for x in argv)
    try:
        _validate(a)
        out, status = _run(a)
    except (UsageError, WindowError, ValueError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
