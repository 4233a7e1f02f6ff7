"""``matkls`` command line.

    matkls info <source> [--format json|table]
    matkls compute --poly {char,tutte,kl,invkl} <source>
    matkls check --theorem <name> <source>
    matkls scan [--dir PATH] [--include-builtin] [--checks a,b,...] [--jobs N]

Exit status: 0 success, 1 usage or input error, 2 a theorem check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import ALL_CHECKS, FAIL, Analysis, check_theorem, classify, scan
from .corpus import builtin_corpus
from .errors import MatklsError
from .fileformat import emit_report, json_int, load_matroid_file, parse_matroid_source, poly_json
from .kls import tutte_polynomial

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matkls", description=__doc__.split("\n")[0] or None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    info = sub.add_parser("info", help="classify a matroid and run every check")
    info.add_argument("source")
    info.add_argument("--format", choices=("json", "table"), default="json")

    compute = sub.add_parser("compute", help="print one polynomial")
    compute.add_argument("--poly", choices=("char", "tutte", "kl", "invkl"), required=True)
    compute.add_argument("source")

    check = sub.add_parser("check", help="run one theorem check")
    check.add_argument("--theorem", choices=ALL_CHECKS, required=True)
    check.add_argument("source")

    sc = sub.add_parser("scan", help="run checks over a corpus")
    sc.add_argument("--dir", type=Path, help="directory of matroid .json files (default: built-in corpus)")
    sc.add_argument("--include-builtin", action="store_true", help="scan the built-in corpus as well as --dir")
    sc.add_argument("--checks", default=",".join(ALL_CHECKS), help="comma-separated check names")
    sc.add_argument("--jobs", type=int, default=None, help="worker processes (default: MATKLS_JOBS or all cores)")
    sc.add_argument("--format", choices=("json", "table"), default="json")
    return parser


def _compute(args, out) -> int:
    m = parse_matroid_source(args.source)
    if args.poly == "tutte":
        t = tutte_polynomial(m)
        payload = {"label": m.label, "poly": "tutte", "terms": [[i, j, json_int(c)] for (i, j), c in sorted(t.terms().items())]}
    else:
        a = Analysis(m)
        if args.poly == "char":
            poly = a.lattice.characteristic_polynomial()
        elif args.poly == "kl":
            poly = a.P
        else:
            poly = a.Q
        payload = {"label": m.label, "poly": args.poly, "coefficients": poly_json(poly)}
    out.write(json.dumps(payload) + "\n")
    return EXIT_OK


def _check(args, out) -> int:
    m = parse_matroid_source(args.source)
    res = check_theorem(m, args.theorem)
    out.write(json.dumps({"label": m.label, "check": res.name, "status": res.status, "details": res.details}) + "\n")
    return EXIT_FAIL if res.status == FAIL else EXIT_OK


def _scan(args, out) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in ALL_CHECKS]
    if unknown:
        raise MatklsError(f"unknown check(s): {', '.join(unknown)}")
    corpus = []
    if args.dir is not None:
        if not args.dir.is_dir():
            raise FileNotFoundError(f"not a directory: {args.dir}")
        corpus += [load_matroid_file(p) for p in sorted(args.dir.glob("*.json"))]
    if args.dir is None or args.include_builtin:
        corpus += builtin_corpus()
    report = scan(corpus, checks, jobs=args.jobs)
    out.write(emit_report(report, args.format))
    return EXIT_FAIL if report.failures else EXIT_OK


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "info":
            m = parse_matroid_source(args.source)
            out.write(emit_report(classify(m, ALL_CHECKS), args.format))
            return EXIT_OK
        if args.command == "compute":
            return _compute(args, out)
        if args.command == "check":
            return _check(args, out)
        return _scan(args, out)
    except (MatklsError, OSError, ValueError) as exc:
        print(f"matkls: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
