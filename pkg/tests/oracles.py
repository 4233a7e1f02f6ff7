"""Brute-force reference implementations used only by the tests.

Nothing here touches the package's bitmask kernels, lattice intervals or KLS
recursions: matroids are frozensets of frozensets, minors are built from scratch,
and polynomial identities are solved with sympy.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import chain, combinations, permutations, product

import sympy as sp

t, x, y = sp.symbols("t x y")


def powerset(items):
    s = list(items)
    return chain.from_iterable(combinations(s, k) for k in range(len(s) + 1))


class RefMatroid:
    """Matroid as (ground tuple, frozenset of frozenset bases)."""

    def __init__(self, ground, bases):
        self.ground = tuple(sorted(ground))
        self.bases = frozenset(frozenset(b) for b in bases)
        self.r = len(next(iter(self.bases)))

    @classmethod
    def from_masks(cls, n, masks):
        return cls(range(n), [[e for e in range(n) if m >> e & 1] for m in masks])

    @classmethod
    def of(cls, m):
        return cls.from_masks(m.n, m.bases)

    def key(self):
        return self.ground, self.bases

    def rank(self, s):
        s = frozenset(s)
        return max(len(b & s) for b in self.bases)

    def closure(self, s):
        rk = self.rank(s)
        return frozenset(e for e in self.ground if self.rank(set(s) | {e}) == rk)

    def flats(self):
        return sorted({self.closure(s) for s in powerset(self.ground)}, key=lambda f: (self.rank(f), sorted(f)))

    def restrict(self, keep):
        keep = frozenset(keep)
        rk = self.rank(keep)
        return RefMatroid(keep, {b & keep for b in self.bases if len(b & keep) == rk}) if keep else EMPTY

    def contract(self, c):
        c = frozenset(c)
        rk = self.rank(c)
        rest = frozenset(self.ground) - c
        if not rest:
            return EMPTY
        return RefMatroid(rest, {b - c for b in self.bases if len(b & c) == rk})

    def relabeled(self):
        pos = {e: i for i, e in enumerate(self.ground)}
        return RefMatroid(range(len(self.ground)), [[pos[e] for e in b] for b in self.bases])


EMPTY = RefMatroid((), [()])


def exchange_holds(bases) -> bool:
    bs = [frozenset(b) for b in bases]
    sb = set(bs)
    for b1 in bs:
        for b2 in bs:
            for e in b1 - b2:
                if not any((b1 - {e}) | {f} in sb for f in b2 - b1):
                    return False
    return True


def gf_independent(vectors, p) -> bool:
    """No nontrivial GF(p) combination of the vectors vanishes (enumerates p**k combos)."""
    k = len(vectors)
    if k == 0:
        return True
    dim = len(vectors[0])
    for coeffs in product(range(p), repeat=k):
        if any(coeffs) and all(sum(c * v[i] for c, v in zip(coeffs, vectors)) % p == 0 for i in range(dim)):
            return False
    return True


def is_connected_bruteforce(m: RefMatroid) -> bool:
    g = frozenset(m.ground)
    for s in powerset(m.ground):
        s = frozenset(s)
        if s and s != g and m.rank(s) + m.rank(g - s) == m.r:
            return False
    return True


def isomorphic_bruteforce(m1: RefMatroid, m2: RefMatroid) -> bool:
    if len(m1.ground) != len(m2.ground) or m1.r != m2.r or len(m1.bases) != len(m2.bases):
        return False
    for perm in permutations(m2.ground):
        mp = dict(zip(m1.ground, perm))
        if {frozenset(mp[e] for e in b) for b in m1.bases} == m2.bases:
            return True
    return False


def has_minor_bruteforce(m: RefMatroid, n: RefMatroid) -> bool:
    ground = m.ground
    for labels in product("cdk", repeat=len(ground)):
        kept = [e for e, l in zip(ground, labels) if l == "k"]
        if len(kept) != len(n.ground):
            continue
        c = [e for e, l in zip(ground, labels) if l == "c"]
        mc = m.contract(c)
        if not kept:
            continue
        minor = mc.restrict(kept).relabeled()
        if isomorphic_bruteforce(minor, n):
            return True
    return False


def mobius_bruteforce(m: RefMatroid):
    flats = m.flats()

    @lru_cache(maxsize=None)
    def mu(a, b):
        if a == b:
            return 1
        if not a <= b:
            return 0
        return -sum(mu(a, h) for h in flats if a <= h < b)

    return flats, mu


def char_poly_whitney(m: RefMatroid):
    """Whitney's subset expansion sum_A (-1)^|A| t^(r - rk A); zero with loops."""
    return sp.expand(sum((-1) ** len(a) * t ** (m.r - m.rank(a)) for a in powerset(m.ground)))


def tutte_deletion_contraction(m: RefMatroid):
    @lru_cache(maxsize=None)
    def go(key):
        ground, bases = key
        mm = RefMatroid(ground, bases) if ground else EMPTY
        if not ground:
            return sp.Integer(1)
        e = ground[0]
        rest = [f for f in ground if f != e]
        is_loop = mm.rank({e}) == 0
        is_coloop = all(e in b for b in mm.bases)
        if is_loop:
            return y * go(mm.restrict(rest).key() if rest else EMPTY.key())
        if is_coloop:
            return x * go(mm.contract({e}).key())
        return sp.expand(go(mm.restrict(rest).key()) + go(mm.contract({e}).key()))

    return sp.expand(go(m.key()))


def _coeff_list(expr, deg):
    poly = sp.Poly(sp.expand(expr), t)
    return [int(poly.coeff_monomial(t**i)) for i in range(deg + 1)]


@lru_cache(maxsize=None)
def _kl_pair(key):
    """(P, Q) as sympy expressions for a loopless matroid, solved from their defining equations."""
    ground, bases = key
    m = RefMatroid(ground, bases) if ground else EMPTY
    r = m.r if ground else 0
    if r == 0:
        return sp.Integer(1), sp.Integer(1)
    flats = m.flats()
    top = frozenset(m.ground)
    half = (r + 1) // 2
    cs = sp.symbols(f"c0:{half}")
    ds = sp.symbols(f"d0:{half}")
    P = sum(c * t**i for i, c in enumerate(cs))
    Q = sum(d * t**i for i, d in enumerate(ds))

    def parts(f):
        res = m.restrict(f).relabeled() if f else EMPTY
        con = m.contract(f).relabeled() if f != top else EMPTY
        return res, con

    p_rhs = 0
    q_rhs = 0
    for f in flats:
        res, con = parts(f)
        rf = m.rank(f)
        chi_res = char_poly_whitney(res) if f else sp.Integer(1)
        chi_con = char_poly_whitney(con) if f != top else sp.Integer(1)
        if f == frozenset():
            p_rhs += chi_res * P
        else:
            p_rhs += chi_res * _kl_pair(_simple_key(con))[0]
        q_res = Q if f == top else _kl_pair(_simple_key(res))[1]
        q_rhs += (-1) ** rf * q_res * t ** (r - rf) * chi_con.subs(t, 1 / t)
    p_eq = sp.expand(t**r * P.subs(t, 1 / t) - p_rhs)
    q_eq = sp.expand(t**r * (-1) ** r * Q.subs(t, 1 / t) - q_rhs)
    p_sol = sp.solve(sp.Poly(p_eq * t**r, t).coeffs(), cs, dict=True)[0]
    q_sol = sp.solve(sp.Poly(q_eq * t ** (2 * r), t).coeffs(), ds, dict=True)[0]
    return sp.expand(P.subs(p_sol)), sp.expand(Q.subs(q_sol))


def _simple_key(m: RefMatroid):
    """Key of the simplification (lattice of flats is unchanged)."""
    if not m.ground:
        return EMPTY.key()
    loops = m.closure(())
    reps = []
    seen = set(loops)
    for e in m.ground:
        if e in seen:
            continue
        cls = m.closure({e}) - loops
        reps.append(min(cls))
        seen |= cls
    if not reps:
        return EMPTY.key()
    return m.restrict(reps).relabeled().key()


def kl_oracle(m: RefMatroid):
    """(P coefficients, Q coefficients) ascending, via minors and sympy."""
    p, q = _kl_pair(_simple_key(m))
    r = m.r
    deg = max(0, (r - 1) // 2)
    return _trim(_coeff_list(p, deg)), _trim(_coeff_list(q, deg))


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c
