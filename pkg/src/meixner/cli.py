"""Command-line front end: ``verify``, ``table`` and ``quad``.

Exit codes: 0 when every verification passes, 1 when any fails, 2 for
usage or validation errors. Rational parameters are given as ``p/q``
strings and stay exact; decimal inputs switch to floating point.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Sequence

from .cumulants import MAX_CLASSICAL, MAX_FREE, moments_to_cumulants
from .jacobi import gauss_quadrature, moments, mu_jacobi, nu_jacobi, support_estimate
from .params import Framework, MeixnerParams, default_grid
from .poly import ops_from_jacobi
from .scalars import as_scalar, format_scalar
from .series import DEFAULT_ORDER, cumulant_series, generating_function, psi, psi_inv
from .suites import SUITES, VerificationReport, run_suite

SCHEMA = 1
SERIES_KINDS = ("psi", "psi-inv", "cumulant", "c-psi", "gf")


class UsageError(Exception):
    pass


def default_order() -> int:
    raw = os.environ.get("MEIXNER_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        order = int(raw)
    except ValueError:
        raise UsageError(f"MEIXNER_ORDER must be an integer, got {raw!r}") from None
    if order < 1:
        raise UsageError("MEIXNER_ORDER must be positive")
    return order


def _scalar_arg(text: str):
    try:
        return as_scalar(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _add_params(p: argparse.ArgumentParser, framework_default: str | None) -> None:
    p.add_argument("--framework", choices=[f.value for f in Framework], default=framework_default)
    p.add_argument("--lambda", dest="lam", type=_scalar_arg, default=None, metavar="L")
    p.add_argument("--eta", type=_scalar_arg, default=None)
    p.add_argument("--t", type=_scalar_arg, default=None)


def _params(args, framework: str) -> MeixnerParams:
    try:
        return MeixnerParams(
            framework,
            args.lam if args.lam is not None else Fraction(0),
            args.eta if args.eta is not None else Fraction(0),
            args.t if args.t is not None else Fraction(1),
        )
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meixner",
        description="Verify and tabulate classical and free Meixner polynomial identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    _add_params(v, None)
    v.add_argument("--order", "-n", type=int, default=None)
    v.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    v.add_argument("--format", choices=("table", "json", "csv"), default="table")
    v.add_argument("--tolerance", type=float, default=1e-10, help="for float paths (default 1e-10)")
    v.add_argument("--jobs", type=int, default=1, help="worker processes across grid points")

    t = sub.add_parser("table", help="emit CSV tables")
    t.add_argument("kind", choices=("poly", "moments", "cumulants", "jacobi", "series"))
    _add_params(t, Framework.CLASSICAL.value)
    t.add_argument("--order", "-n", type=int, default=None, help="largest index")
    t.add_argument("--measure", choices=("mu", "nu"), default="mu")
    t.add_argument("--which", choices=SERIES_KINDS, default="psi-inv")
    t.add_argument("--x0", type=_scalar_arg, default=Fraction(0), help="evaluation point for gf")

    q = sub.add_parser("quad", help="Gauss quadrature nodes and weights")
    _add_params(q, Framework.CLASSICAL.value)
    q.add_argument("--measure", choices=("mu", "nu"), default="mu")
    q.add_argument("-m", type=int, required=True, help="number of points")
    q.add_argument("--support", action="store_true", help="print the node-extreme interval instead")
    return parser


# ---------------------------------------------------------------------------
# verify


def _grid(args) -> list[MeixnerParams]:
    frameworks = [args.framework] if args.framework else [f.value for f in Framework]
    if args.lam is None and args.eta is None:
        t = args.t if args.t is not None else Fraction(1)
        grid = [p for p in default_grid() if p.framework.value in frameworks]
        try:
            return [p.with_(t=t) for p in grid]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return [_params(args, fw) for fw in frameworks]


def _job(item):
    suite, p, order, tol = item
    return run_suite(suite, p, order, tol)


def _json_line(r: VerificationReport) -> str:
    if r.max_abs_error is None:
        err = "exact"
    elif r.max_abs_error == float("inf"):
        err = None
    else:
        err = r.max_abs_error
    row = {
        "schema": SCHEMA,
        "suite": r.suite,
        "framework": r.params.framework.value,
        "params": {
            "lambda": format_scalar(r.params.lam),
            "eta": format_scalar(r.params.eta),
            "t": format_scalar(r.params.t),
        },
        "order": r.order,
        "status": r.status,
        "max_abs_error": err,
        "detail": r.detail,
        "elapsed_ms": r.elapsed_ms,
    }
    return json.dumps(row)


def _error_text(r: VerificationReport) -> str:
    return "exact" if r.max_abs_error is None else format(r.max_abs_error, ".3e")


CSV_FIELDS = ("suite", "framework", "lambda", "eta", "t", "order", "status", "max_abs_error", "detail")


def _csv_row(r: VerificationReport) -> list:
    p = r.params
    return [
        r.suite, p.framework.value, format_scalar(p.lam), format_scalar(p.eta), format_scalar(p.t),
        r.order, r.status, _error_text(r), r.detail or "",
    ]


def _print_table(reports: Sequence[VerificationReport], out) -> None:
    header = ["suite", "framework", "lambda", "eta", "t", "order", "status", "max_abs_error", "ms"]
    rows = [header]
    for r in reports:
        row = _csv_row(r)[:-1] + [str(r.elapsed_ms)]
        rows.append([str(c) for c in row])
    widths = [max(len(row[k]) for row in rows) for k in range(len(header))]
    for row in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
    for r in reports:
        if r.detail:
            out.write(f"{r.suite} {r.params.framework.value} ({format_scalar(r.params.lam)}, "
                      f"{format_scalar(r.params.eta)}): {r.detail}\n")


def cmd_verify(args, out) -> int:
    order = args.order if args.order is not None else default_order()
    if order < 3:
        raise UsageError("order must be at least 3")
    if args.jobs < 1:
        raise UsageError("jobs must be positive")
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    work = [(s, p, order, args.tolerance) for p in _grid(args) for s in suites]

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            stream = pool.map(_job, work)  # results come back in submission order
            reports = _emit(stream, args.format, out)
    else:
        reports = _emit(map(_job, work), args.format, out)
    return 0 if all(r.passed for r in reports) else 1


def _emit(stream, fmt: str, out) -> list[VerificationReport]:
    reports = []
    writer = None
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_FIELDS)
    for r in stream:
        reports.append(r)
        if fmt == "json":
            out.write(_json_line(r) + "\n")
        elif writer is not None:
            writer.writerow(_csv_row(r))
    if fmt == "table":
        _print_table(reports, out)
    return reports


# ---------------------------------------------------------------------------
# table and quad


def _measure(p: MeixnerParams, which: str, N: int):
    return mu_jacobi(p, N) if which == "mu" else nu_jacobi(p, N)


def _series(p: MeixnerParams, which: str, N: int, x0):
    if which == "psi":
        return psi(p, N)
    if which == "psi-inv":
        return psi_inv(p, N)
    if which == "cumulant":
        return cumulant_series(p, max(N, 2)).truncate(N)
    if which == "c-psi":
        return cumulant_series(p, max(N, 2)).truncate(N).compose(psi(p, N))
    return generating_function(p, x0, N)


def cmd_table(args, out) -> int:
    p = _params(args, args.framework)
    N = args.order if args.order is not None else default_order()
    if N < 0:
        raise UsageError("order must be nonnegative")
    w = csv.writer(out, lineterminator="\n")
    fmt = format_scalar

    if args.kind == "poly":
        basis = ops_from_jacobi(mu_jacobi(p, max(N, 1)), N)
        w.writerow(["n"] + [f"c{k}" for k in range(N + 1)])
        for n in range(N + 1):
            w.writerow([n] + [fmt(c) for c in basis[n].coeffs])
    elif args.kind == "moments":
        m = moments(_measure(p, args.measure, max(N // 2, 1)), N)
        w.writerow(["n", "moment"])
        for n, v in enumerate(m):
            w.writerow([n, fmt(v)])
    elif args.kind == "cumulants":
        cap = MAX_CLASSICAL if p.framework is Framework.CLASSICAL else MAX_FREE
        if not 1 <= N <= cap:
            raise UsageError(f"cumulant order must be in 1..{cap}")
        m = moments(mu_jacobi(p, max(N // 2, 1)), N)
        w.writerow(["n", "cumulant"])
        for n, c in enumerate(moments_to_cumulants(p.framework, m, N), start=1):
            w.writerow([n, fmt(c)])
    elif args.kind == "jacobi":
        J = _measure(p, args.measure, N)
        w.writerow(["n", "b", "a"])
        for n in range(N + 1):
            w.writerow([n, fmt(J.b[n]), fmt(J.offdiag(n)) if n >= 1 else ""])
    else:
        if args.which in ("psi", "psi-inv", "c-psi") and N < 1:
            raise UsageError("order must be at least 1")
        s = _series(p, args.which, N, args.x0)
        w.writerow(["k", "coefficient"])
        for k, c in enumerate(s.coeffs):
            w.writerow([k, fmt(c)])
    return 0


def cmd_quad(args, out) -> int:
    p = _params(args, args.framework)
    if args.m < 1:
        raise UsageError("m must be positive")
    J = _measure(p, args.measure, args.m)
    w = csv.writer(out, lineterminator="\n")
    if args.support:
        lo, hi = support_estimate(J, args.m)
        w.writerow(["lower", "upper"])
        w.writerow([format_scalar(float(lo)), format_scalar(float(hi))])
        return 0
    rule = gauss_quadrature(J, args.m)
    w.writerow(["i", "node", "weight"])
    for i, (x, wt) in enumerate(zip(rule.nodes, rule.weights)):
        w.writerow([i, format_scalar(float(x)), format_scalar(float(wt))])
    return 0


COMMANDS = {"verify": cmd_verify, "table": cmd_table, "quad": cmd_quad}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, sys.stdout)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    except (ValueError, ArithmeticError) as exc:
        print(f"meixner: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
