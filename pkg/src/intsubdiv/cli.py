"""Command line entry point (``intsubdiv`` / ``python -m intsubdiv``).

Exit status: 0 on success, 1 for computation-level errors, 2 for usage
errors and malformed input.  Diagnostics go to stderr only.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .analysis import analysis_report
from .complex import f_vector, h_from_f, is_reciprocal, parse_facets, serialize_facets
from .errors import MalformedInput, NumericError, UnsupportedMethod
from .spectral import limit_convergence_report
from .subdivision import interval_complex
from .transforms import f_matrix, h_interval, h_matrix, h_matrix_inverse, r_matrix

EULERIAN_KINDS = {"a": "A", "b": "B", "b+": "B+", "b-": "B-", "t": "T"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_complex(args):
    if (args.file is None) == (args.facets is None):
        raise _UsageError("give exactly one of FILE or --facets")
    if args.facets is not None:
        text = args.facets.replace(";", "\n")
    else:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise _UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    return parse_facets(text)


def _emit_vector(v, name, fmt, out):
    if fmt == "json":
        out.write(json.dumps({name: list(v)}) + "\n")
    elif fmt == "tsv":
        out.write("\t".join(map(str, v)) + "\n")
    else:
        out.write(" ".join(map(str, v)) + "\n")


def cmd_fvec(args, out):
    _emit_vector(f_vector(_read_complex(args)), "f", args.format, out)


def cmd_hvec(args, out):
    _emit_vector(h_from_f(f_vector(_read_complex(args))), "h", args.format, out)


def cmd_subdivide(args, out):
    if args.times < 0:
        raise _UsageError("--times must be non-negative")
    K = _read_complex(args)
    labeling = None
    for _ in range(args.times):
        K, labeling = interval_complex(K)
    if args.counts_only:
        f = f_vector(K)
        h = h_from_f(f)
        if args.format == "json":
            out.write(json.dumps({"f": list(f), "h": list(h)}) + "\n")
        else:
            sep = "\t" if args.format == "tsv" else " "
            out.write(sep.join(map(str, f)) + "\n" + sep.join(map(str, h)) + "\n")
        return
    out.write(serialize_facets(K))
    if args.labels:
        if labeling is None:
            raise _UsageError("--labels needs --times >= 1")
        Path(args.labels).write_text(labeling.sidecar(), encoding="utf-8")


def cmd_matrix(args, out):
    if args.dim < 0:
        raise _UsageError("--dim must be non-negative")
    if args.method and args.kind != "r":
        raise _UsageError("--method applies to --kind r only")
    builders = {"f": f_matrix, "h": h_matrix, "hinv": h_matrix_inverse}
    M = r_matrix(args.dim, args.method or "eulerian") if args.kind == "r" else builders[args.kind](args.dim)
    if args.format == "json":
        out.write(json.dumps(M.to_json()) + "\n")
    elif args.format == "tsv":
        out.write(M.to_tsv())
    else:
        out.write("\n".join(" ".join(map(str, r)) for r in M.rows) + "\n")


def cmd_eulerian(args, out):
    from .signed import eulerian, table_rows

    kind = EULERIAN_KINDS[args.kind]
    if args.d < 1:
        raise _UsageError("--d must be positive")
    if args.format == "tsv":
        out.write("d\tj\tk\tcount\n")
        for row in table_rows(kind, args.d, args.j, args.method):
            out.write("\t".join(map(str, row)) + "\n")
        return
    if args.j is not None:
        letters = [args.j]
    elif kind in ("A", "T"):
        letters = list(range(1, args.d + 1))
    else:
        letters = [x for x in range(-args.d, args.d + 1) if x]
    polys = {j: eulerian(kind, args.d, j, args.method) for j in letters}
    if args.format == "json":
        doc = {"kind": kind, "d": args.d,
               "polynomials": [{"j": j, "coeffs": list(p.coeffs)} for j, p in polys.items()]}
        out.write(json.dumps(doc) + "\n")
    elif args.j is not None:
        out.write(str(polys[args.j]) + "\n")
    else:
        for j, p in polys.items():
            out.write(f"{j}: {p}\n")


def cmd_analyze(args, out):
    K = _read_complex(args)
    h = h_from_f(f_vector(K))
    hi = h_interval(h)
    report = analysis_report(hi)
    if args.format == "json":
        doc = {"h": list(h), "hInt": list(hi), "reciprocal": is_reciprocal(hi), "report": report}
        out.write(json.dumps(doc) + "\n")
        return
    color = out.isatty() and "NO_COLOR" not in os.environ

    def flag(v):
        s = str(v).lower()
        if not color or not isinstance(v, bool):
            return s
        return f"\x1b[{32 if v else 31}m{s}\x1b[0m"

    out.write(f"h(K)            {' '.join(map(str, h))}\n")
    out.write(f"h(Int K)        {' '.join(map(str, hi))}\n")
    out.write(f"real-rooted     {flag(report['realRooted'])}\n")
    out.write(f"distinct roots  {report['distinctRealRoots']}\n")
    out.write(f"log-concave     {flag(report['logConcave'])}\n")
    out.write(f"unimodal        {flag(report['unimodal'])}\n")
    out.write(f"reciprocal      {flag(is_reciprocal(hi))}\n")
    out.write(f"charney-davis   {report['charneyDavis']}\n")


def cmd_limit_roots(args, out):
    if args.iters < 2:
        raise _UsageError("--iters must be at least 2")
    if args.tol <= 0:
        raise _UsageError("--tol must be positive")
    traj = limit_convergence_report(f_vector(_read_complex(args)), args.iters, args.tol, args.poly)
    if args.format == "plain":
        for n, rs, dist in zip(traj.ns, traj.roots, traj.distances):
            roots = " ".join(f"{z.real:.12g}{z.imag:+.3g}j" for z in rs)
            out.write(f"{n}\t{'-' if dist is None else f'{dist:.3e}'}\t{roots}\n")
        out.write(f"converged\t{str(traj.converged).lower()}\n")
    else:
        out.write(traj.dumps() + "\n")


def cmd_selftest(args, out):
    from .selftest import run_all

    results = run_all(max_d=args.max_d, seed=args.seed)
    for r in sorted(results, key=lambda r: r.number):
        out.write(r.line() + "\n")
    failed = [r.number for r in results if not r.passed]
    out.write(f"{len(results) - len(failed)}/{len(results)} criteria passed\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="intsubdiv", description="Interval subdivisions of simplicial complexes.")
    p.add_argument("--format", choices=("plain", "json", "tsv"), default=None)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_input(sp):
        sp.add_argument("file", nargs="?", help="facet file")
        sp.add_argument("--facets", help="inline facets, e.g. '1 2 3;3 4'")
        return sp

    with_input(sub.add_parser("fvec", help="f-vector")).set_defaults(func=cmd_fvec)
    with_input(sub.add_parser("hvec", help="h-vector")).set_defaults(func=cmd_hvec)

    sp = with_input(sub.add_parser("subdivide", help="build Int(K) explicitly"))
    sp.add_argument("--times", type=int, default=1)
    sp.add_argument("--counts-only", action="store_true")
    sp.add_argument("--labels", help="write the label sidecar of the last round here")
    sp.set_defaults(func=cmd_subdivide)

    sp = sub.add_parser("matrix", help="transformation matrices")
    sp.add_argument("--kind", choices=("f", "h", "hinv", "r"), required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--method", choices=("algebraic", "eulerian"))
    sp.set_defaults(func=cmd_matrix)

    sp = sub.add_parser("eulerian", help="j-Eulerian polynomials")
    sp.add_argument("--kind", choices=tuple(EULERIAN_KINDS), required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--j", type=int)
    sp.add_argument("--method", choices=("enumerate", "recurrence", "e2", "reversal"))
    sp.set_defaults(func=cmd_eulerian)

    with_input(sub.add_parser("analyze", help="root and coefficient analysis of h(Int K, t)")) \
        .set_defaults(func=cmd_analyze)

    sp = with_input(sub.add_parser("limit-roots", help="roots of iterated subdivisions"))
    sp.add_argument("--iters", type=int, default=12)
    sp.add_argument("--tol", type=float, default=1e-6)
    sp.add_argument("--poly", choices=("f", "h"), default="f")
    sp.set_defaults(func=cmd_limit_roots, format_default="json")

    sp = sub.add_parser("selftest", help="run the cross-validation battery")
    sp.add_argument("--max-d", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_selftest)

    # allow --format after the subcommand as well
    for action in sub.choices.values():
        action.add_argument("--format", choices=("plain", "json", "tsv"), default=argparse.SUPPRESS)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.format is None:
            args.format = getattr(args, "format_default", "plain")
        status = args.func(args, out)
        return status or 0
    except _UsageError as exc:
        err.write(f"intsubdiv: usage error: {exc}\n")
        return 2
    except MalformedInput as exc:
        err.write(f"intsubdiv: malformed input: {exc}\n")
        return 2
    except (UnsupportedMethod, NumericError, ArithmeticError) as exc:
        err.write(f"intsubdiv: error: {exc}\n")
        return 1
    except ValueError as exc:
        err.write(f"intsubdiv: invalid argument: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
