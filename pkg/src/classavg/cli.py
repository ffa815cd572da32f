"""Command-line front end.

Every command prints one JSON record per line to stdout. Rationals are
"p/q" strings; floats carry the method that produced them and a
tolerance or standard error. Identical flags give identical output.

Exit codes: 0 ok, 1 unexpected failure, 2 bad flags, 3 unsupported
group, 4 singular parameters, 5 violated precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .averages import ProductQuery, RatioQuery, moment, product_average, ratio_average
from .errors import (
    ClassAvgError,
    PreconditionViolated,
    SingularParameters,
    SingularPoint,
    TooLarge,
    UnsupportedGroup,
)
from .exact_algebra import rat_str
from .groups import Family, GroupSpec, parse_family
from .haar_oracle import (
    ct_average,
    mc_eigen_average,
    mc_matrix_average,
    moment_integrand,
    quad_average,
    ratio_tail_bound,
    truncated_ratio_integrand,
)
from .suites import SUITES, product_ct, run_suite

EXIT_OK, EXIT_FAIL, EXIT_FLAGS, EXIT_UNSUPPORTED, EXIT_SINGULAR, EXIT_PRECONDITION = range(6)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational 'p/q': {text!r}") from None


def _emit(record: dict):
    print(json.dumps(record, ensure_ascii=False, sort_keys=False))


def _record(group: GroupSpec, params: dict, method: str, *, exact=None, value_float=None, status="ok", **extra) -> dict:
    out = {
        "value_exact": None if exact is None else rat_str(exact),
        "value_float": float(exact) if value_float is None and exact is not None else value_float,
        "method": method,
        "group": group.name,
        "params": params,
        "status": status,
    }
    out.update(extra)
    return out


# moment


def _moment_quad(g: GroupSpec, k: int, order: int) -> tuple[float, float]:
    f = moment_integrand(g, k)
    value = quad_average(g, f, order)
    # spread between two orders as an error estimate
    return value, abs(value - quad_average(g, f, order + 8))


def _moment_mc(g: GroupSpec, k: int, samples: int, seed: int) -> tuple[float, float]:
    if g.family in (Family.O_FULL, Family.O_MINUS):
        det_sign = None if g.family is Family.O_FULL else -1
        return mc_matrix_average(
            g.matrix_size, det_sign, lambda e: np.real(np.prod(1 - e, axis=-1)) ** k, samples, seed
        )
    return mc_eigen_average(g, moment_integrand(g, k), samples, seed)


def cmd_moment(args) -> int:
    g = GroupSpec(parse_family(args.group), args.n)
    methods = args.method or ["closed"]
    params = {"N": args.n, "k": args.k}
    exact: dict[str, Fraction] = {}
    records = []
    for method in dict.fromkeys(methods):
        if method == "closed":
            exact[method] = moment(g, args.k).value
            records.append(_record(g, params, method, exact=exact[method]))
        elif method == "ct":
            exact[method] = ct_average(moment_integrand(g, args.k))
            records.append(_record(g, params, method, exact=exact[method]))
        elif method == "quad":
            value, err = _moment_quad(g, args.k, args.order)
            records.append(_record(g, {**params, "order": args.order}, method, value_float=value, tolerance=err))
        else:
            value, se = _moment_mc(g, args.k, args.samples, args.seed)
            records.append(_record(g, {**params, "samples": args.samples, "seed": args.seed}, method, value_float=value, stderr=se))
    code = EXIT_OK
    if len(exact) == 2 and exact["closed"] != exact["ct"]:
        for r in records:
            if r["method"] in exact:
                r["status"] = "fail"
        code = EXIT_FAIL
    for r in records:
        _emit(r)
    return code


# average


def cmd_average(args) -> int:
    g = GroupSpec(parse_family(args.group), args.n)
    base = {"xs": args.x, "inverse_side": args.alpha_inv, "sign": args.sign}
    if args.kind == "product":
        if args.y or args.gamma or args.delta:
            raise PreconditionViolated("product averages take no denominator parameters")
        q = ProductQuery(g, **base)
        result = product_average(q)
    else:
        q = RatioQuery(g, **base, ys=args.y, gammas=args.gamma, deltas=args.delta)
        result = ratio_average(q)
    params = {k: [rat_str(v) for v in vals] for k, vals in
              (("xs", q.xs), ("inverse_side", q.inverse_side), ("ys", getattr(q, "ys", ())),
               ("gammas", getattr(q, "gammas", ())), ("deltas", getattr(q, "deltas", ()))) if vals}
    params["sign"] = q.sign
    records = [_record(g, params, "closed", exact=result.value, kind=args.kind)]
    code = EXIT_OK
    if args.check:
        if args.kind == "product":
            oracle = product_ct(q)
            ok = oracle == result.value
            records.append(_record(g, params, "ct", exact=oracle, status="pass" if ok else "fail", kind=args.kind, tolerance=0.0))
        else:
            f = truncated_ratio_integrand(
                g, q.xs, q.ys, args.degree, gammas=q.gammas, deltas=q.deltas, inverse_side=q.inverse_side, sign=q.sign
            )
            oracle = ct_average(f)
            tol = ratio_tail_bound(f) + 1e-12
            ok = abs(float(oracle - result.value)) <= tol
            records.append(
                _record(g, {**params, "D": args.degree}, "ct-truncated", value_float=float(oracle),
                        status="pass" if ok else "fail", kind=args.kind, tolerance=tol)
            )
        if not ok:
            code = EXIT_FAIL
    for r in records:
        _emit(r)
    return code


# verify


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_k, args.max_n, args.seed, args.threads, args.samples)
    for case in report.cases:
        if case.status != "pass":
            record = {"suite": report.suite, **case.to_record()}
            if not args.timings:
                del record["elapsed"]
            _emit(record)
    _emit({
        "suite": report.suite,
        "settings": report.settings,
        "summary": report.summary,
        "status": "pass" if report.ok else "fail",
    })
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json(timings=args.timings))
            fh.write("\n")
    return EXIT_OK if report.ok else EXIT_FAIL


# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="classavg", description="Exact Haar averages over classical groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    m = sub.add_parser("moment", help="E det(I - g)^k (unitary: E |det(I - g)|^2k)")
    m.add_argument("--group", required=True, help="u, sp, so-even, so-odd, o, o-minus")
    m.add_argument("--n", required=True, type=int, help="half-rank N")
    m.add_argument("--k", required=True, type=int)
    m.add_argument("--method", action="append", choices=["closed", "ct", "quad", "mc"],
                   help="repeatable; closed and ct must agree when both are given")
    m.add_argument("--order", type=int, default=40, help="quadrature order")
    m.add_argument("--samples", type=int, default=10**6)
    m.add_argument("--seed", type=int, default=0)
    m.set_defaults(run=cmd_moment)

    a = sub.add_parser("average", help="products and ratios of characteristic polynomials")
    a.add_argument("kind", choices=["product", "ratio"])
    a.add_argument("--group", required=True, help="group family")
    a.add_argument("--n", required=True, type=int)
    a.add_argument("--x", "--alpha", dest="x", action="append", type=_rational, default=[],
                   help="numerator parameter, factor det(I + x g); repeatable")
    a.add_argument("--alpha-inv", action="append", type=_rational, default=[],
                   help="unitary only: factor det(I + g^-1 / alpha)")
    a.add_argument("--y", action="append", type=_rational, default=[], help="denominator det(I - y g)")
    a.add_argument("--gamma", action="append", type=_rational, default=[], help="unitary denominator det(I - gamma g)")
    a.add_argument("--delta", action="append", type=_rational, default=[], help="unitary denominator det(I - delta g^-1)")
    a.add_argument("--sign", type=int, choices=[1, -1], default=None,
                   help="factor det(I + sign x g); default -1 for so-odd, +1 otherwise")
    a.add_argument("--check", action="store_true", help="cross-check against constant-term integration")
    a.add_argument("--degree", type=int, default=30, help="series truncation degree for ratio checks")
    a.set_defaults(run=cmd_average)

    v = sub.add_parser("verify", help="run an identity verification suite")
    v.add_argument("--suite", required=True, choices=SUITES + ("all",))
    v.add_argument("--max-k", type=int, default=3)
    v.add_argument("--max-n", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--samples", type=int, default=200_000, help="Monte Carlo samples in oracle-crosscheck")
    v.add_argument("--report", help="write the full report as JSON to this path")
    v.add_argument("--timings", action="store_true", help="include per-case timings (output no longer reproducible)")
    v.set_defaults(run=cmd_verify)
    return parser


def _validate(parser: argparse.ArgumentParser, args):
    for name in ("n", "k", "order", "samples", "threads", "max_k", "max_n", "degree"):
        value = getattr(args, name, None)
        if value is not None and value < (0 if name == "k" else 1):
            parser.error(f"--{name.replace('_', '-')} must be positive")
    if getattr(args, "command", None) == "average" and args.sign is None:
        args.sign = -1 if parse_family(args.group) is Family.SO_ODD else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.run(args)
    except Exception as exc:
        code = _exit_code(exc)
        if code is None:
            raise
        print(f"classavg: {exc}", file=sys.stderr)
        return code


def _exit_code(exc: Exception) -> int | None:
    if isinstance(exc, UnsupportedGroup):
        return EXIT_UNSUPPORTED
    if isinstance(exc, (SingularParameters, SingularPoint)):
        return EXIT_SINGULAR
    if isinstance(exc, (PreconditionViolated, TooLarge)):
        return EXIT_PRECONDITION
    if isinstance(exc, ClassAvgError):
        return EXIT_FLAGS
    if isinstance(exc, RuntimeError):
        return EXIT_FAIL
    return None


if __name__ == "__main__":
    sys.exit(main())
