"""Degeneracy classification, executable theorem checks and the corpus scanner."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

from .errors import RankZero, UnknownCheck
from .kls import (
    KLSMemo,
    inverse_kl_polynomial,
    inverse_kl_via_convolution,
    kl_polynomial,
    q_constant_term,
    q_linear_coefficient,
)
from .lattice import FlatLattice, is_modular_lattice, is_projective_geometry, lattice_of_flats, whitney_table
from .matroid import (
    Matroid,
    find_connected_contraction_element,
    is_connected,
    is_regular,
    is_simple,
    simplify,
)
from .poly import IntPoly

PASS, FAIL, FINDING, SKIP = "pass", "fail", "finding", "skip"

THEOREM_CHECKS = (
    "t0",
    "tq",
    "oddrank",
    "evenrank",
    "modularity",
    "convolution",
    "topheavy",
    "lemma_mi",
    "modregular",
)
EXTRA_CHECKS = ("degree_bounds", "cross_q", "positivity")
ALL_CHECKS = THEOREM_CHECKS + EXTRA_CHECKS


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    details: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class MatroidReport:
    label: str
    n: int
    r: int
    simple: bool
    connected: bool
    modular: bool
    projective_geometry: bool
    regular: bool
    degenerate: bool
    char_poly: IntPoly
    P: IntPoly
    Q: IntPoly
    whitney_first: tuple[int, ...]
    whitney_second: tuple[int, ...]
    check_results: list[CheckResult] = field(default_factory=list)

    @property
    def conjecture_counterexample(self) -> bool:
        return self.connected and self.regular and self.degenerate and self.r >= 1


@dataclass
class ScanReport:
    corpus_size: int
    reports: list[MatroidReport]
    counterexamples: list[dict]
    seconds: float = 0.0

    @property
    def failures(self) -> list[dict]:
        return [c for c in self.counterexamples if c["kind"] == FAIL]

    @property
    def findings(self) -> list[dict]:
        return [c for c in self.counterexamples if c["kind"] == FINDING]


class Analysis:
    """Lazily computed invariants of one matroid, shared between checks."""

    def __init__(self, m: Matroid):
        self.m = m

    @cached_property
    def lattice(self) -> FlatLattice:
        return lattice_of_flats(self.m)

    @cached_property
    def memo(self) -> KLSMemo:
        return KLSMemo(self.lattice)

    @cached_property
    def P(self) -> IntPoly:
        return kl_polynomial(self.lattice, memo=self.memo)

    @cached_property
    def Q(self) -> IntPoly:
        return inverse_kl_polynomial(self.lattice, memo=self.memo)

    @cached_property
    def simple(self) -> bool:
        return is_simple(self.m)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.m)

    @cached_property
    def modular(self) -> bool:
        return is_modular_lattice(self.lattice)

    @cached_property
    def regular(self) -> bool:
        return is_regular(self.m)

    @cached_property
    def whitney(self):
        return whitney_table(self.lattice)

    @property
    def r(self) -> int:
        return self.m.r

    def P_at(self, i: int, j: int) -> IntPoly:
        return kl_polynomial(self.lattice, i, j, self.memo)

    def Q_at(self, i: int, j: int) -> IntPoly:
        return inverse_kl_polynomial(self.lattice, i, j, self.memo)

    def intervals(self):
        lat = self.lattice
        for i in range(len(lat)):
            for j in lat.up[i]:
                yield i, j


def is_degenerate(m: Matroid) -> bool:
    if m.r < 1:
        raise RankZero("degeneracy is defined for rank >= 1")
    return _degenerate(Analysis(m))


def _degenerate(a: Analysis) -> bool:
    return a.P.degree < (a.r - 1) // 2


def _check_t0(a: Analysis) -> CheckResult:
    mu = q_constant_term(a.lattice)
    if a.Q[0] == mu:
        return CheckResult("t0", PASS, f"[t^0]Q = |mu| = {mu}")
    return CheckResult("t0", FAIL, f"[t^0]Q = {a.Q[0]} but |mu| = {mu}")


def _check_tq(a: Analysis) -> CheckResult:
    if a.r < 1:
        return CheckResult("tq", SKIP, "rank 0")
    s, _ = simplify(a.m)
    sa = a if s == a.m else Analysis(s)
    formula = q_linear_coefficient(sa.lattice)
    rec = sa.Q[1]
    if formula == rec:
        return CheckResult("tq", PASS, f"|w_1r| - |w_0,r-1| = [t]Q = {rec}")
    return CheckResult("tq", FAIL, f"formula gives {formula}, recursion gives {rec}")


def _check_oddrank(a: Analysis) -> CheckResult:
    if a.r % 2 == 0:
        return CheckResult("oddrank", SKIP, "even rank")
    k = (a.r - 1) // 2
    p, q = a.P[k], a.Q[k]
    if p == q:
        return CheckResult("oddrank", PASS, f"[t^{k}]P = [t^{k}]Q = {p}")
    return CheckResult("oddrank", FAIL, f"coefficient {k}: P has {p}, Q has {q}")


def _check_evenrank(a: Analysis) -> CheckResult:
    if a.r % 2 or a.r == 0:
        return CheckResult("evenrank", SKIP, "odd rank or rank 0")
    k = a.r // 2
    lat = a.lattice
    lhs = a.P[k - 1] + a.Q[k - 1]
    rhs = 0
    for f in range(len(lat)):
        if lat.ranks[f] % 2:
            rhs += (a.P_at(f, lat.top) * a.Q_at(lat.bottom, f))[k - 1]
    diff = a.Q[k - 1] - a.P[k - 1]
    sign = "Q>P" if diff > 0 else "Q<P" if diff < 0 else "Q=P"
    if lhs == rhs:
        return CheckResult("evenrank", PASS, f"[t^{k - 1}](P+Q) = {lhs} = odd-flat sum; {sign}")
    return CheckResult("evenrank", FAIL, f"[t^{k - 1}](P+Q) = {lhs} but odd-flat sum = {rhs}")


def _check_modularity(a: Analysis) -> CheckResult:
    verdicts = {
        "modular": a.modular,
        "P=1": a.P == IntPoly(1),
        "[t]P=0": a.P[1] == 0,
        "degQ=0": a.Q.degree == 0,
    }
    text = ", ".join(f"{k}={v}" for k, v in verdicts.items())
    if len(set(verdicts.values())) == 1:
        return CheckResult("modularity", PASS, text)
    return CheckResult("modularity", FAIL, text)


def _signed_sum(terms) -> IntPoly:
    acc = IntPoly()
    for sign, poly in terms:
        acc = acc - poly if sign else acc + poly
    return acc


def _check_convolution(a: Analysis) -> CheckResult:
    lat = a.lattice
    for i, j in a.intervals():
        if i == j:
            continue
        span = lat.interval(i, j)
        left = _signed_sum(
            ((lat.ranks[j] - lat.ranks[h]) % 2, a.P_at(i, h) * a.Q_at(h, j)) for h in span
        )
        right = _signed_sum(
            ((lat.ranks[h] - lat.ranks[i]) % 2, a.Q_at(i, h) * a.P_at(h, j)) for h in span
        )
        if left or right:
            return CheckResult(
                "convolution", FAIL, f"interval ({i},{j}): sums {left} and {right}"
            )
    return CheckResult("convolution", PASS, "both zero-identities hold on every interval")


def _check_topheavy(a: Analysis) -> CheckResult:
    if not a.modular:
        return CheckResult("topheavy", SKIP, "not modular")
    W = a.whitney.W1
    r = len(W) - 1
    for k in range(r + 1):
        if W[k] != W[r - k]:
            return CheckResult("topheavy", FAIL, f"W_{k} = {W[k]} != W_{r - k} = {W[r - k]}")
    return CheckResult("topheavy", PASS, f"W = {list(W)} symmetric")


def _check_lemma_mi(a: Analysis) -> CheckResult:
    if a.r < 1 or not a.simple or not a.connected:
        return CheckResult("lemma_mi", SKIP, "needs simple, connected, rank >= 1")
    try:
        i = find_connected_contraction_element(a.m)
    except AssertionError as exc:
        return CheckResult("lemma_mi", FAIL, str(exc))
    return CheckResult("lemma_mi", PASS, f"element {i}")


def _check_modregular(a: Analysis) -> CheckResult:
    if a.r < 3 or not a.connected or not a.modular:
        return CheckResult("modregular", SKIP, "needs connected, modular, rank >= 3")
    if a.regular:
        return CheckResult("modregular", FAIL, "connected modular matroid of rank >= 3 is regular")
    return CheckResult("modregular", PASS, "not regular")


def _check_degree_bounds(a: Analysis) -> CheckResult:
    lat = a.lattice
    for i, j in a.intervals():
        rho = lat.ranks[j] - lat.ranks[i]
        if rho == 0:
            continue
        p, q = a.P_at(i, j), a.Q_at(i, j)
        if not 2 * p.degree < rho or not 2 * q.degree < rho:
            return CheckResult(
                "degree_bounds", FAIL, f"interval ({i},{j}) rank {rho}: deg P={p.degree}, deg Q={q.degree}"
            )
        if p[0] != 1 or q[0] != abs(lat.mobius(i, j)):
            return CheckResult("degree_bounds", FAIL, f"interval ({i},{j}): constant terms {p[0]}, {q[0]}")
    return CheckResult("degree_bounds", PASS, "deg < rank/2 on every interval")


def _check_cross_q(a: Analysis) -> CheckResult:
    lat = a.lattice
    for i, j in a.intervals():
        rec = a.Q_at(i, j)
        conv = inverse_kl_via_convolution(lat, a.memo, i, j)
        if rec != conv:
            return CheckResult("cross_q", FAIL, f"interval ({i},{j}): {rec} vs {conv}")
    return CheckResult("cross_q", PASS, "recursion and convolution agree on every interval")


def log_concave_no_internal_zeros(coeffs) -> bool:
    c = list(coeffs)
    nz = [i for i, x in enumerate(c) if x]
    if nz and any(c[i] == 0 for i in range(nz[0], nz[-1] + 1)):
        return False
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def _check_positivity(a: Analysis) -> CheckResult:
    notes = []
    for name, poly in (("P", a.P), ("Q", a.Q)):
        if any(c < 0 for c in poly.coeffs):
            notes.append(f"{name} has a negative coefficient")
        if not log_concave_no_internal_zeros(poly.coeffs):
            notes.append(f"{name} is not log-concave without internal zeros")
    if notes:
        return CheckResult("positivity", FINDING, "; ".join(notes))
    return CheckResult("positivity", PASS, "P, Q non-negative and log-concave")


_CHECKS = {
    "t0": _check_t0,
    "tq": _check_tq,
    "oddrank": _check_oddrank,
    "evenrank": _check_evenrank,
    "modularity": _check_modularity,
    "convolution": _check_convolution,
    "topheavy": _check_topheavy,
    "lemma_mi": _check_lemma_mi,
    "modregular": _check_modregular,
    "degree_bounds": _check_degree_bounds,
    "cross_q": _check_cross_q,
    "positivity": _check_positivity,
}


def check_theorem(m: Matroid | Analysis, which: str) -> CheckResult:
    fn = _CHECKS.get(which)
    if fn is None:
        raise UnknownCheck(f"unknown check {which!r}; choose from {', '.join(ALL_CHECKS)}")
    a = m if isinstance(m, Analysis) else Analysis(m)
    return fn(a)


def classify(m: Matroid, checks=()) -> MatroidReport:
    a = Analysis(m)
    results = [check_theorem(a, c) for c in checks]
    return MatroidReport(
        label=m.label,
        n=m.n,
        r=m.r,
        simple=a.simple,
        connected=a.connected,
        modular=a.modular,
        projective_geometry=is_projective_geometry(a.lattice),
        regular=a.regular,
        degenerate=_degenerate(a),
        char_poly=a.lattice.characteristic_polynomial(),
        P=a.P,
        Q=a.Q,
        whitney_first=a.whitney.w1,
        whitney_second=a.whitney.W1,
        check_results=results,
    )


def rank3_modular_charpoly_identity(n: int) -> bool:
    """Whether ``(t-1)(t-2)(t-n+3)`` equals the Tutte-derived cubic for ``n`` points."""
    if n < 3:
        raise ValueError("n must be at least 3")
    product = IntPoly([-1, 1]) * IntPoly([-2, 1]) * IntPoly([3 - n, 1])
    # n(n-3)/2 and (n^2-5n+2)/2 are integers for every n
    tutte_side = IntPoly([-(n * n - 5 * n + 2) // 2, n * (n - 3) // 2, -n, 1])
    return product == tutte_side


def _scan_one(args) -> MatroidReport:
    m, checks = args
    return classify(m, checks)


def default_jobs() -> int:
    env = os.environ.get("MATKLS_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def scan(corpus, checks=ALL_CHECKS, jobs: int | None = None) -> ScanReport:
    """Classify every matroid and run ``checks``; failures are bugs, conjecture hits are findings."""
    corpus = sorted(corpus, key=lambda m: m.label)
    checks = tuple(checks)
    for c in checks:
        if c not in _CHECKS:
            raise UnknownCheck(f"unknown check {c!r}")
    jobs = default_jobs() if jobs is None else jobs
    start = time.perf_counter()
    work = [(m, checks) for m in corpus]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(work))) as pool:
            reports = list(pool.map(_scan_one, work))
    else:
        reports = [_scan_one(w) for w in work]
    issues = []
    for rep in reports:
        for res in rep.check_results:
            if res.status in (FAIL, FINDING):
                issues.append({"label": rep.label, "kind": res.status, "claim": res.name, "details": res.details})
        if rep.conjecture_counterexample:
            issues.append(
                {
                    "label": rep.label,
                    "kind": FINDING,
                    "claim": "conjecture",
                    "details": "connected regular degenerate matroid",
                }
            )
    return ScanReport(len(corpus), reports, issues, time.perf_counter() - start)
