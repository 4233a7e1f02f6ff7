"""Matroid files and report serialization.

A matroid file is a JSON object with exactly the fields ``name`` (string),
``n`` (integer, at most 32) and ``bases`` (list of lists of 0-based elements).

Reports are emitted either as JSON ("structured text") or as a plain table.
Polynomials are ascending coefficient lists; integers whose magnitude reaches
2**53 are written as decimal strings so that no JSON reader loses precision.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .bits import to_list
from .errors import MalformedFile, MatroidError
from .matroid import Matroid, matroid_from_bases
from .named import build_named
from .poly import IntPoly

_FIELDS = ("name", "n", "bases")
_SAFE = 2**53


@dataclass(frozen=True)
class MatroidFile:
    name: str
    n: int
    bases: list[list[int]]

    @classmethod
    def from_matroid(cls, m: Matroid, name: str | None = None) -> MatroidFile:
        return cls(name if name is not None else m.label, m.n, [to_list(b) for b in m.bases])

    def to_matroid(self) -> Matroid:
        return matroid_from_bases(self.n, self.bases, label=self.name)


def parse_matroid_file(text: str, source: str = "<string>") -> MatroidFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFile(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise MalformedFile(f"{source}: top level must be an object")
    unknown = sorted(set(data) - set(_FIELDS))
    if unknown:
        raise MalformedFile(f"{source}: unknown field(s) {', '.join(unknown)}")
    missing = [f for f in _FIELDS if f not in data]
    if missing:
        raise MalformedFile(f"{source}: missing field(s) {', '.join(missing)}")
    name, n, bases = data["name"], data["n"], data["bases"]
    if not isinstance(name, str):
        raise MalformedFile(f"{source}: field 'name' must be a string")
    if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= 32:
        raise MalformedFile(f"{source}: field 'n' must be an integer in 0..32")
    if not isinstance(bases, list):
        raise MalformedFile(f"{source}: field 'bases' must be a list")
    for k, b in enumerate(bases):
        if not isinstance(b, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in b):
            raise MalformedFile(f"{source}: bases[{k}] must be a list of integers")
        bad = [e for e in b if not 0 <= e < n]
        if bad:
            raise MalformedFile(f"{source}: bases[{k}] has elements {bad} outside 0..{n - 1}")
    return MatroidFile(name, n, bases)


def load_matroid_file(path) -> Matroid:
    path = Path(path)
    mf = parse_matroid_file(path.read_text(), str(path))
    try:
        return mf.to_matroid()
    except MatroidError as exc:
        exc.source = str(path)
        exc.args = (f"{path}: {exc}",)
        raise


def dump_matroid_file(m: Matroid, name: str | None = None) -> str:
    mf = MatroidFile.from_matroid(m, name)
    return json.dumps({"name": mf.name, "n": mf.n, "bases": mf.bases}) + "\n"


def parse_matroid_source(arg: str) -> Matroid:
    """A named spec (see :func:`matkls.named.build_named`) or a path to a matroid file."""
    path = Path(arg)
    if arg.endswith(".json") or path.exists():
        if not path.exists():
            raise FileNotFoundError(f"no such matroid file: {arg}")
        return load_matroid_file(path)
    return build_named(arg)


def json_int(x: int):
    return x if -_SAFE < x < _SAFE else str(x)


def poly_json(p: IntPoly) -> list:
    return [json_int(c) for c in p.coeffs]


def report_json(rep) -> dict:
    return {
        "label": rep.label,
        "n": rep.n,
        "r": rep.r,
        "simple": rep.simple,
        "connected": rep.connected,
        "modular": rep.modular,
        "projective_geometry": rep.projective_geometry,
        "regular": rep.regular,
        "degenerate": rep.degenerate,
        "char_poly": poly_json(rep.char_poly),
        "P": poly_json(rep.P),
        "Q": poly_json(rep.Q),
        "whitney_first": [json_int(x) for x in rep.whitney_first],
        "whitney_second": [json_int(x) for x in rep.whitney_second],
        "checks": [{"name": c.name, "status": c.status, "details": c.details} for c in rep.check_results],
    }


def scan_json(scan) -> dict:
    return {
        "corpus_size": scan.corpus_size,
        "failures": len(scan.failures),
        "findings": len(scan.findings),
        "counterexamples": scan.counterexamples,
        "matroids": [report_json(r) for r in scan.reports],
    }


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def report_table(rep) -> str:
    rows = [
        ("label", rep.label),
        ("n", str(rep.n)),
        ("rank", str(rep.r)),
        ("simple", _yn(rep.simple)),
        ("connected", _yn(rep.connected)),
        ("modular", _yn(rep.modular)),
        ("projective geometry", _yn(rep.projective_geometry)),
        ("regular", _yn(rep.regular)),
        ("degenerate", _yn(rep.degenerate)),
        ("characteristic", str(rep.char_poly)),
        ("P", str(rep.P)),
        ("Q", str(rep.Q)),
        ("Whitney 1st kind", " ".join(map(str, rep.whitney_first))),
        ("Whitney 2nd kind", " ".join(map(str, rep.whitney_second))),
    ]
    rows += [(f"check {c.name}", f"{c.status}  {c.details}".rstrip()) for c in rep.check_results]
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows) + "\n"


def scan_table(scan) -> str:
    header = f"{'label':<12} {'n':>3} {'r':>3}  conn  mod   reg   degen  P / Q"
    lines = [header, "-" * len(header)]
    for rep in scan.reports:
        lines.append(
            f"{rep.label:<12} {rep.n:>3} {rep.r:>3}  {_yn(rep.connected):<5} {_yn(rep.modular):<5} "
            f"{_yn(rep.regular):<5} {_yn(rep.degenerate):<6} {rep.P} / {rep.Q}"
        )
    lines.append("")
    lines.append(f"matroids: {scan.corpus_size}  failures: {len(scan.failures)}  findings: {len(scan.findings)}")
    for c in scan.counterexamples:
        lines.append(f"  [{c['kind']}] {c['label']}: {c['claim']}: {c['details']}")
    return "\n".join(lines) + "\n"


def emit_report(report, fmt: str = "json") -> str:
    from .analysis import MatroidReport, ScanReport

    if isinstance(report, ScanReport):
        return scan_table(report) if fmt == "table" else json.dumps(scan_json(report), indent=2) + "\n"
    if isinstance(report, MatroidReport):
        return report_table(report) if fmt == "table" else json.dumps(report_json(report), indent=2) + "\n"
    raise TypeError(f"cannot emit {type(report).__name__}")
