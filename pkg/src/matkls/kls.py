"""Kazhdan-Lusztig-Stanley engine over a lattice of flats.

For an interval ``[F, G]`` of rank ``rho``:

* ``P`` is the unique polynomial of degree ``< rho/2`` with
  ``t^rho P(1/t) = sum_{F <= H <= G} chi_[F,H](t) P_[H,G](t)``.
* ``Q`` is the unique polynomial of degree ``< rho/2`` with
  ``(-1)^rho Q(t) = sum_{F <= H <= G} (-1)^(rho_H - rho_F) t^(rho_H - rho_F) Q_[F,H](1/t) chi_[H,G](t)``.

``Q`` is also computed a second, independent way from the convolution identity
``sum_H P_[F,H] (-1)^(rho_G - rho_H) Q_[H,G] = 0``; the two must agree.
"""

from __future__ import annotations

from math import comb

from .errors import NotComparable, TooLarge
from .lattice import FlatLattice
from .matroid import Matroid
from .poly import IntPoly, IntPoly2, reverse
from . import _kernels

TUTTE_LIMIT = 20

ONE = IntPoly(1)


class KLSMemo:
    """Per-lattice cache of interval polynomials keyed by ``(F-index, G-index)``."""

    def __init__(self, lat: FlatLattice):
        self.lat = lat
        self.chi: dict[tuple[int, int], IntPoly] = {}
        self.P: dict[tuple[int, int], IntPoly] = {}
        self.Q: dict[tuple[int, int], IntPoly] = {}
        self.Q_conv: dict[tuple[int, int], IntPoly] = {}

    def char(self, i: int, j: int) -> IntPoly:
        key = (i, j)
        v = self.chi.get(key)
        if v is None:
            v = self.chi[key] = self.lat.characteristic_polynomial(i, j)
        return v


def _rank_gap(lat: FlatLattice, i: int, j: int) -> int:
    if not lat.leq(i, j):
        raise NotComparable(f"flat {i} is not below flat {j}")
    return lat.ranks[j] - lat.ranks[i]


def kl_polynomial(lat: FlatLattice, i: int | None = None, j: int | None = None, memo: KLSMemo | None = None) -> IntPoly:
    i = lat.bottom if i is None else i
    j = lat.top if j is None else j
    memo = memo or KLSMemo(lat)
    return _P(lat, i, j, memo)


def _P(lat: FlatLattice, i: int, j: int, memo: KLSMemo) -> IntPoly:
    key = (i, j)
    hit = memo.P.get(key)
    if hit is not None:
        return hit
    rho = _rank_gap(lat, i, j)
    if rho == 0:
        memo.P[key] = ONE
        return ONE
    # t^rho P(1/t) - P(t) = Z(t); P lives strictly below rho/2, so its
    # coefficients are read off the top half of Z
    z = IntPoly()
    for h in lat.interval(i, j):
        if h != i:
            z = z + memo.char(i, h) * _P(lat, h, j, memo)
    out = IntPoly([z[rho - k] for k in range((rho + 1) // 2)])
    memo.P[key] = out
    return out


def inverse_kl_polynomial(
    lat: FlatLattice, i: int | None = None, j: int | None = None, memo: KLSMemo | None = None
) -> IntPoly:
    i = lat.bottom if i is None else i
    j = lat.top if j is None else j
    memo = memo or KLSMemo(lat)
    return _Q(lat, i, j, memo)


def _Q(lat: FlatLattice, i: int, j: int, memo: KLSMemo) -> IntPoly:
    key = (i, j)
    hit = memo.Q.get(key)
    if hit is not None:
        return hit
    rho = _rank_gap(lat, i, j)
    if rho == 0:
        memo.Q[key] = ONE
        return ONE
    base = lat.ranks[i]
    rhs = IntPoly()
    for h in lat.interval(i, j):
        if h == j:
            continue
        d = lat.ranks[h] - base
        term = reverse(_Q(lat, i, h, memo), d) * memo.char(h, j)
        rhs = rhs - term if d % 2 else rhs + term
    if rho % 2:
        rhs = -rhs
    out = rhs.truncate((rho + 1) // 2)
    memo.Q[key] = out
    return out


def inverse_kl_via_convolution(
    lat: FlatLattice, memo: KLSMemo | None = None, i: int | None = None, j: int | None = None
) -> IntPoly:
    """``Q`` solved from ``sum_H P_[F,H] (-1)^(rho_G - rho_H) Q_[H,G] = 0``."""
    i = lat.bottom if i is None else i
    j = lat.top if j is None else j
    memo = memo or KLSMemo(lat)
    return _Q_conv(lat, i, j, memo)


def _Q_conv(lat: FlatLattice, i: int, j: int, memo: KLSMemo) -> IntPoly:
    key = (i, j)
    hit = memo.Q_conv.get(key)
    if hit is not None:
        return hit
    rho = _rank_gap(lat, i, j)
    if rho == 0:
        memo.Q_conv[key] = ONE
        return ONE
    top = lat.ranks[j]
    acc = IntPoly()
    for h in lat.interval(i, j):
        if h == i:
            continue
        term = _P(lat, i, h, memo) * _Q_conv(lat, h, j, memo)
        acc = acc - term if (top - lat.ranks[h]) % 2 else acc + term
    # the H = F term is (-1)^rho Q itself
    out = acc if rho % 2 else -acc
    memo.Q_conv[key] = out
    return out


def tutte_polynomial(m: Matroid) -> IntPoly2:
    """Subset expansion ``sum_A (x-1)^(r - rk A) (y-1)^(|A| - rk A)``."""
    if m.n > TUTTE_LIMIT:
        raise TooLarge(f"subset expansion limited to {TUTTE_LIMIT} elements, got {m.n}")
    counts = _kernels.tutte_counts(m._rank_table, m.n, m.r)
    rows = len(counts)
    cols = len(counts[0])
    coeffs = [[0] * cols for _ in range(rows)]
    for a in range(rows):
        for b in range(cols):
            c = counts[a][b]
            if not c:
                continue
            for i in range(a + 1):
                ci = c * comb(a, i) * (-1) ** (a - i)
                for j in range(b + 1):
                    coeffs[i][j] += ci * comb(b, j) * (-1) ** (b - j)
    return IntPoly2(coeffs)


def char_from_tutte(m: Matroid) -> IntPoly:
    """``(-1)^r T(1 - t, 0)``; zero when ``m`` has a loop."""
    if m.n > TUTTE_LIMIT:
        raise TooLarge(f"subset expansion limited to {TUTTE_LIMIT} elements, got {m.n}")
    if m.loops():
        return IntPoly()
    val = tutte_polynomial(m).substitute(IntPoly([1, -1]), IntPoly())
    return -val if m.r % 2 else val


def q_constant_term(lat: FlatLattice) -> int:
    return abs(lat.mobius(lat.bottom, lat.top))


def q_linear_coefficient(lat: FlatLattice) -> int:
    """``|w_{1,r}| - |w_{0,r-1}|`` from the doubly-indexed Whitney numbers."""
    from .lattice import whitney_table

    r = lat.r - lat.ranks[lat.bottom]
    if r < 1:
        raise ValueError("linear coefficient formula needs rank >= 1")
    w = whitney_table(lat).w
    return abs(w[1][r]) - abs(w[0][r - 1])


def interval_pairs(lat: FlatLattice):
    """All comparable pairs ``(F, G)``."""
    for i in range(len(lat)):
        for j in lat.up[i]:
            yield i, j
