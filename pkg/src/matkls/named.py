"""Named matroid constructors and the textual source grammar.

Grammar::

    uniform:k,n | boolean:n | pg:d,q | fano | fano-dual
    graphic:<edges> | sum:<spec>+<spec>[+...]

``<edges>`` is either a comma-separated list ``u-v`` of vertex pairs or one of
the graph names ``K<n>``, ``K<a>,<b>``, ``C<n>``, ``W<n>`` (wheel with n spokes),
``prism``.
"""

from __future__ import annotations

import re
from functools import reduce
from itertools import product

from .bits import MAX_ELEMENTS
from .errors import CapacityExceeded, ParseError, UnsupportedField
from .matroid import (
    SUPPORTED_PRIMES,
    Matroid,
    boolean,
    direct_sum,
    fano,
    fano_dual,
    matroid_from_matrix,
    uniform,
)


def projective_points(d: int, q: int) -> list[tuple[int, ...]]:
    """Normalized representatives (first nonzero entry 1) of PG(d, q)."""
    pts = []
    for v in product(range(q), repeat=d + 1):
        nz = next((x for x in v if x), 0)
        if nz == 1:
            pts.append(v)
    return pts


def projective_geometry(d: int, q: int) -> Matroid:
    if q not in SUPPORTED_PRIMES:
        raise UnsupportedField(f"q={q} not in {SUPPORTED_PRIMES}")
    if d < 0:
        raise ParseError("projective dimension must be non-negative")
    size = (q ** (d + 1) - 1) // (q - 1)
    if size > MAX_ELEMENTS:
        raise CapacityExceeded(f"PG({d},{q}) has {size} points, more than {MAX_ELEMENTS}")
    pts = projective_points(d, q)
    entries = [[p[i] for p in pts] for i in range(d + 1)]
    return matroid_from_matrix(q, d + 1, len(pts), entries, label=f"PG({d},{q})")


def graphic(edges: list[tuple[int, int]], label: str = "") -> Matroid:
    """Cycle matroid of a multigraph, via its GF(2) incidence matrix."""
    if not edges:
        raise ParseError("graphic matroid needs at least one edge")
    if len(edges) > MAX_ELEMENTS:
        raise CapacityExceeded(f"{len(edges)} edges exceeds {MAX_ELEMENTS}")
    vertices = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(vertices)}
    entries = [[0] * len(edges) for _ in vertices]
    for k, (u, v) in enumerate(edges):
        if u != v:
            entries[pos[u]][k] = 1
            entries[pos[v]][k] = 1
    return matroid_from_matrix(2, len(vertices), len(edges), entries, label=label)


def complete_graph(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def complete_bipartite(a: int, b: int) -> list[tuple[int, int]]:
    return [(u, a + v) for u in range(a) for v in range(b)]


def cycle_graph(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def wheel_graph(spokes: int) -> list[tuple[int, int]]:
    rim = [(i, (i % spokes) + 1) for i in range(1, spokes + 1)]
    return [(0, i) for i in range(1, spokes + 1)] + [(u, v) for u, v in rim]


PRISM = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]

_GRAPH_NAMES = [
    (re.compile(r"K(\d+),(\d+)$"), lambda a, b: complete_bipartite(int(a), int(b))),
    (re.compile(r"K(\d+)$"), lambda n: complete_graph(int(n))),
    (re.compile(r"C(\d+)$"), lambda n: cycle_graph(int(n))),
    (re.compile(r"W(\d+)$"), lambda n: wheel_graph(int(n))),
    (re.compile(r"prism$"), lambda: PRISM),
]


def parse_edges(text: str) -> list[tuple[int, int]]:
    text = text.strip()
    for pattern, build in _GRAPH_NAMES:
        m = pattern.match(text)
        if m:
            edges = build(*m.groups())
            if not edges:
                raise ParseError(f"graph {text!r} has no edges")
            return edges
    edges = []
    for item in text.split(","):
        m = re.fullmatch(r"\s*(\d+)\s*-\s*(\d+)\s*", item)
        if not m:
            raise ParseError(f"bad edge {item!r}; expected u-v")
        edges.append((int(m.group(1)), int(m.group(2))))
    return edges


def _ints(args: str, count: int, kind: str) -> list[int]:
    parts = [p.strip() for p in args.split(",")]
    if len(parts) != count or not all(re.fullmatch(r"\d+", p) for p in parts):
        raise ParseError(f"{kind} expects {count} non-negative integers, got {args!r}")
    return [int(p) for p in parts]


def build_named(spec: str) -> Matroid:
    spec = spec.strip()
    kind, _, args = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "uniform":
        k, n = _ints(args, 2, "uniform")
        if n > MAX_ELEMENTS:
            raise CapacityExceeded(f"U{k},{n} exceeds {MAX_ELEMENTS} elements")
        if k > n:
            raise ParseError(f"uniform rank {k} exceeds size {n}")
        return uniform(k, n)
    if kind == "boolean":
        (n,) = _ints(args, 1, "boolean")
        if n > MAX_ELEMENTS:
            raise CapacityExceeded(f"B{n} exceeds {MAX_ELEMENTS} elements")
        return boolean(n)
    if kind == "pg":
        d, q = _ints(args, 2, "pg")
        return projective_geometry(d, q)
    if kind == "fano" and not args:
        return fano()
    if kind == "fano-dual" and not args:
        return fano_dual()
    if kind == "graphic":
        return graphic(parse_edges(args), label=f"graphic:{args.strip()}")
    if kind == "sum":
        parts = [p for p in args.split("+")]
        if len(parts) < 2 or not all(p.strip() for p in parts):
            raise ParseError(f"sum needs at least two summands: {spec!r}")
        summands = [build_named(p) for p in parts]
        total = sum(s.n for s in summands)
        if total > MAX_ELEMENTS:
            raise CapacityExceeded(f"direct sum has {total} elements")
        return reduce(direct_sum, summands).with_label(spec)
    raise ParseError(f"unrecognized matroid spec {spec!r}")
