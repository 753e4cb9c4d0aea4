"""Command line front end: ``permgamma {gamma,verify,enumerate,rsk,theta}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .exceptions import InvariantViolation, PermGammaError
from .hopping import hop_class
from .parabolic import FILTERS, KSubset, check_bound, enumerate_w_of_k, enumerate_w_upper_k
from .polynomials import GAMMA_METHODS, gamma_partitioned, h_poly_partitioned
from .tableaux import check_partition, enumerate_syt, rep_gamma, rsk, tableau_descent_set
from .theta import j_full_trace, l_full_trace
from .verify import parse_checks, run_verification
from .words import format_word, parse_permutation, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _k_from_args(args) -> KSubset:
    if args.n is None:
        raise UsageError("--n is required")
    try:
        return KSubset.parse(args.n, args.K)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_gamma(args) -> int:
    K = _k_from_args(args)
    if K.n < 1:
        raise UsageError("--n must be at least 1")
    check_bound(K.n, args.max_enum)
    h = list(h_poly_partitioned(K, max_n=args.max_enum))
    gamma = list(gamma_partitioned(K, "hpoly", max_n=args.max_enum).entries)
    methods = {}
    if args.all_methods:
        methods = {m: list(gamma_partitioned(K, m, max_n=args.max_enum).entries) for m in GAMMA_METHODS}
        methods["kostka"] = list(rep_gamma(K, max_n=args.max_enum).entries)
    if args.format == "json":
        out = {"h": h, "gamma": gamma}
        if methods:
            out["methods"] = methods
        print(_dumps(out))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        cols = list(methods) if methods else ["gamma"]
        writer.writerow(["n", "K", "j", *cols])
        for j in range(len(gamma)):
            vals = [methods[c][j] for c in cols] if methods else [gamma[j]]
            writer.writerow([K.n, str(K), j, *vals])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"n={K.n} K={{{K}}}")
        print("h:", " ".join(map(str, h)))
        print("gamma:", " ".join(map(str, gamma)))
        for m, g in methods.items():
            print(f"gamma[{m}]:", " ".join(map(str, g)))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        checks = parse_checks(args.checks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.max_n < 1:
        raise UsageError("--max-n must be at least 1")
    check_bound(args.max_n, args.max_enum)
    jobs = args.jobs or os.cpu_count() or 1
    report = run_verification(args.max_n, checks, jobs=jobs)
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh, indent=1)
            fh.write("\n")
    payload = {k: v for k, v in report.items() if k != "metadata"}
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "K", "j", *GAMMA_METHODS, "passed"])
        for r in report["records"]:
            for j in range(len(r["gamma"]["hpoly"])):
                writer.writerow(
                    [r["n"], ",".join(map(str, r["K"])), j, *(r["gamma"][m][j] for m in GAMMA_METHODS), r["passed"]]
                )
        sys.stdout.write(buf.getvalue())
    else:
        s = report["summary"]
        print(f"checks: {','.join(checks)}  records: {s['records']}  passed: {s['passed']}  failed: {s['failed']}")
        if s["first_counterexample"]:
            print("first counterexample:", _dumps(s["first_counterexample"]))
    if not report["summary"]["ok"]:
        print(_dumps(report["summary"]["first_counterexample"]), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _render_perm(w, fmt: str) -> str:
    if fmt == "json":
        return _dumps(list(w))
    if fmt == "csv":
        return ",".join(map(str, w))
    return format_word(w)


def _render_tableau(T, fmt: str) -> str:
    if fmt == "json":
        return _dumps(T.to_list())
    sep = (";", ",") if fmt == "csv" else (" / ", " ")
    return sep[0].join(sep[1].join(map(str, row)) for row in T.rows)


def cmd_enumerate(args) -> int:
    kind = args.kind
    if kind == "syt":
        if args.shape is None:
            raise UsageError("--shape is required for --kind syt")
        try:
            shape = check_partition(int(x) for x in args.shape.split(",") if x.strip())
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        lines = [_render_tableau(T, args.format) for T in enumerate_syt(shape, args.filter, max_n=args.max_enum)]
    elif kind == "hopclass":
        if args.seed is None:
            raise UsageError("--seed is required for --kind hopclass")
        try:
            seed = parse_permutation(args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        lines = [_render_perm(w, args.format) for w in hop_class(seed, max_n=args.max_enum).sorted()]
    else:
        K = _k_from_args(args)
        if kind == "wk":
            items = enumerate_w_upper_k(K, args.filter, max_n=args.max_enum)
        elif args.filter != "all":
            raise UsageError("--filter applies to wk and syt only")
        else:
            items = enumerate_w_of_k(K, max_n=args.max_enum)
        lines = [_render_perm(w, args.format) for w in items]
    for line in lines:
        print(line)
    return EXIT_OK


def cmd_rsk(args) -> int:
    try:
        word = parse_word(args.word)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    P, Q = rsk(word)
    out = {
        "P": P.to_list(),
        "Q": Q.to_list(),
        "shape": list(P.shape),
        "descents": sorted(tableau_descent_set(Q)),
    }
    print(_dumps(out))
    return EXIT_OK


def cmd_theta(args) -> int:
    K = _k_from_args(args)
    try:
        perm = parse_permutation(args.perm)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(perm) != K.n:
        raise UsageError(f"permutation has length {len(perm)} but --n is {K.n}")
    if args.inverse:
        steps = l_full_trace(perm, K)
        result = steps[-1]["perm"] if steps else list(perm)
    else:
        steps = j_full_trace(perm, K)
        result = steps[-1]["perm"] if steps else list(perm)
    out = {"input": list(perm), "K": list(K.sorted()), "inverse": args.inverse, "result": result}
    if args.trace:
        out["trace"] = steps
    print(_dumps(out))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permgamma", description=__doc__.splitlines()[0])
    parser.add_argument("--max-enum", type=int, default=None, help="override the enumeration bound (default 10)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_nk(p):
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--K", default="", help='comma-separated subset of [n-1]; "" for the empty set')

    p = sub.add_parser("gamma", help="h-polynomial and gamma vector of P_n(K)")
    add_nk(p)
    p.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    p.add_argument("--all-methods", action="store_true", help="also report every independent gamma route")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("verify", help="exhaustive verification over all K, n <= max-n")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--checks", default="all", help="comma-separated subset of gamma,bijection,hop,rsk,kostka,phi")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--report", default=None, help="also write the full report, with timings, to this file")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list W^K, W(K), a hop class, or standard tableaux")
    p.add_argument("--kind", required=True, choices=("wk", "wofk", "hopclass", "syt"))
    add_nk(p)
    p.add_argument("--filter", choices=FILTERS, default="all")
    p.add_argument("--seed", default=None, help="seed permutation for --kind hopclass")
    p.add_argument("--shape", default=None, help="partition for --kind syt, e.g. 3,2")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("rsk", help="insertion and recording tableaux of a word")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("theta", help="apply J_K (or L_K with --inverse) and optionally trace it")
    add_nk(p)
    p.add_argument("--perm", required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_theta)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"permgamma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"permgamma: internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except PermGammaError as exc:
        print(f"permgamma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
