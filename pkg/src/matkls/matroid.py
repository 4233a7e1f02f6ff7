"""Matroids stored by their basis family, with rank/closure oracles and minors.

Ground sets are ``{0..n-1}`` and subsets are ``int`` bitmasks (see :mod:`matkls.bits`).
Every operation is pure; the only hidden state is lazily built caches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import _kernels
from .bits import MAX_ELEMENTS, compress, elements, from_elements, full, to_list
from .errors import (
    CapacityExceeded,
    ContractsEverything,
    DeletesEverything,
    ElementOutOfRange,
    EmptyBases,
    ExchangeAxiomViolated,
    NotConnected,
    NotPrime,
    NotSimple,
    RankZero,
    TooManyColumns,
    UnequalBasisSizes,
)

# full rank tables are built up to this ground-set size (2**n bytes)
RANK_TABLE_LIMIT = 20
SUPPORTED_PRIMES = (2, 3, 5, 7)


@dataclass(frozen=True)
class Matroid:
    n: int
    bases: tuple[int, ...]
    r: int
    label: str = field(default="", compare=False)

    @cached_property
    def _rank_table(self):
        if self.n > RANK_TABLE_LIMIT:
            return None
        return _kernels.rank_table(self.n, self.bases)

    @cached_property
    def _rank_cache(self) -> dict[int, int]:
        return {}

    @cached_property
    def _basis_set(self) -> frozenset[int]:
        return frozenset(self.bases)

    @property
    def ground(self) -> int:
        return full(self.n)

    def rank(self, mask: int) -> int:
        table = self._rank_table
        if table is not None:
            return table[mask]
        cache = self._rank_cache
        v = cache.get(mask)
        if v is None:
            v = cache[mask] = _kernels.max_intersection(self.bases, mask)
        return v

    def is_basis(self, mask: int) -> bool:
        return mask in self._basis_set

    def is_independent(self, mask: int) -> bool:
        return self.rank(mask) == mask.bit_count()

    def closure(self, mask: int) -> int:
        rk = self.rank(mask)
        out = mask
        for e in elements(self.ground & ~mask):
            if self.rank(mask | 1 << e) == rk:
                out |= 1 << e
        return out

    def loops(self) -> int:
        return self.closure(0)

    def coloops(self) -> int:
        common = self.ground
        for b in self.bases:
            common &= b
        return common

    def element_degrees(self) -> list[int]:
        """Number of bases containing each element."""
        deg = [0] * self.n
        for b in self.bases:
            for e in elements(b):
                deg[e] += 1
        return deg

    def dual(self) -> Matroid:
        g = self.ground
        label = f"{self.label}*" if self.label else ""
        return Matroid(self.n, tuple(sorted(g & ~b for b in self.bases)), self.n - self.r, label)

    def with_label(self, label: str) -> Matroid:
        return Matroid(self.n, self.bases, self.r, label)

    def __repr__(self) -> str:
        name = self.label or "Matroid"
        return f"<{name}: n={self.n}, r={self.r}, {len(self.bases)} bases>"


@dataclass(frozen=True)
class MinorMap:
    """Surviving elements of a minor, mapped order-preservingly onto ``0..|kept|-1``."""

    kept: int
    relabel: dict[int, int]

    @classmethod
    def from_kept(cls, kept: int) -> MinorMap:
        return cls(kept, {e: i for i, e in enumerate(elements(kept))})


def rank(m: Matroid, mask: int) -> int:
    return m.rank(mask)


def closure(m: Matroid, mask: int) -> int:
    return m.closure(mask)


def _check_capacity(n: int) -> None:
    if not 0 <= n <= MAX_ELEMENTS:
        raise CapacityExceeded(f"ground set size {n} outside 0..{MAX_ELEMENTS}")


def check_exchange(bases) -> tuple[int, int, int] | None:
    """Return a witness ``(B1, B2, e)`` of a basis-exchange failure, or None."""
    basis_set = set(bases)
    for b1 in bases:
        for b2 in bases:
            d2 = b2 & ~b1
            for e in elements(b1 & ~b2):
                base = b1 & ~(1 << e)
                if not any(base | 1 << f in basis_set for f in elements(d2)):
                    return b1, b2, e
    return None


def matroid_from_bases(n: int, bases, label: str = "", validate: bool = True) -> Matroid:
    """Build a matroid from a list of bases (each an iterable of element indices)."""
    _check_capacity(n)
    masks = set()
    for b in bases:
        b = list(b)
        if any(not 0 <= e < n for e in b):
            raise ElementOutOfRange(f"basis {b} has elements outside 0..{n - 1}")
        masks.add(from_elements(b))
    if not masks:
        raise EmptyBases("a matroid needs at least one basis")
    sizes = {m.bit_count() for m in masks}
    if len(sizes) > 1:
        raise UnequalBasisSizes(f"bases have sizes {sorted(sizes)}")
    ordered = tuple(sorted(masks))
    if validate:
        witness = check_exchange(ordered)
        if witness is not None:
            b1, b2, e = witness
            raise ExchangeAxiomViolated(to_list(b1), to_list(b2), e)
    return Matroid(n, ordered, sizes.pop(), label)


def _gf_inverse(a: int, p: int) -> int:
    return pow(a, p - 2, p)


def _reduce(vec: list[int], echelon: list[tuple[int, list[int]]], p: int) -> list[int]:
    vec = list(vec)
    for piv, row in echelon:
        c = vec[piv]
        if c:
            vec = [(x - c * y) % p for x, y in zip(vec, row)]
    return vec


def _normalize(vec: list[int], p: int) -> tuple[int, list[int]] | None:
    for i, x in enumerate(vec):
        if x:
            inv = _gf_inverse(x, p)
            return i, [(y * inv) % p for y in vec]
    return None


def matroid_from_matrix(p: int, rows: int, cols: int, entries, label: str = "") -> Matroid:
    """Column matroid of a ``rows x cols`` integer matrix over GF(p)."""
    if p not in SUPPORTED_PRIMES:
        raise NotPrime(f"field size {p} not in {SUPPORTED_PRIMES}")
    if cols > MAX_ELEMENTS:
        raise TooManyColumns(f"{cols} columns exceeds {MAX_ELEMENTS}")
    matrix = [[int(x) % p for x in row] for row in entries]
    if len(matrix) != rows or any(len(row) != cols for row in matrix):
        raise ValueError(f"matrix shape does not match {rows}x{cols}")
    columns = [[matrix[i][j] for i in range(rows)] for j in range(cols)]

    found: list[int] = []
    best = 0

    # depth-first over independent column sets, carrying an echelon form
    def extend(start: int, chosen: int, size: int, echelon):
        nonlocal best
        if size > best:
            best = size
            found.clear()
        if size == best:
            found.append(chosen)
        for j in range(start, cols):
            if size + (cols - j) < best:
                return
            piv = _normalize(_reduce(columns[j], echelon, p), p)
            if piv is not None:
                extend(j + 1, chosen | 1 << j, size + 1, echelon + [piv])

    extend(0, 0, 0, [])
    bases = tuple(sorted(b for b in found if b.bit_count() == best))
    return Matroid(cols, bases, best, label)


def uniform(k: int, n: int) -> Matroid:
    _check_capacity(n)
    if not 0 <= k <= n:
        raise ValueError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    bases = tuple(sorted(from_elements(c) for c in combinations(range(n), k)))
    return Matroid(n, bases, k, f"U{k},{n}")


def boolean(n: int) -> Matroid:
    _check_capacity(n)
    return Matroid(n, (full(n),), n, f"B{n}")


def _relabelled(m: Matroid, kept: int, bases, label: str = "") -> tuple[Matroid, MinorMap]:
    new_bases = tuple(sorted({compress(b, kept) for b in bases}))
    r = new_bases[0].bit_count()
    return Matroid(kept.bit_count(), new_bases, r, label), MinorMap.from_kept(kept)


def delete(m: Matroid, mask: int) -> tuple[Matroid, MinorMap]:
    if mask & ~m.ground:
        raise ElementOutOfRange("deletion set outside ground set")
    if m.n and mask == m.ground:
        raise DeletesEverything("cannot delete the whole ground set")
    kept = m.ground & ~mask
    rk = m.rank(kept)
    bases = [b & kept for b in m.bases if (b & kept).bit_count() == rk]
    return _relabelled(m, kept, bases)


def contract(m: Matroid, mask: int) -> tuple[Matroid, MinorMap]:
    if mask & ~m.ground:
        raise ElementOutOfRange("contraction set outside ground set")
    if m.n and mask == m.ground:
        raise ContractsEverything("cannot contract the whole ground set")
    kept = m.ground & ~mask
    rk = m.rank(mask)
    bases = [b & kept for b in m.bases if (b & mask).bit_count() == rk]
    return _relabelled(m, kept, bases)


def minor(m: Matroid, contract_set: int, delete_set: int) -> Matroid:
    """``M / contract_set \\ delete_set`` relabelled onto the survivors."""
    kept = m.ground & ~contract_set & ~delete_set
    rc = m.rank(contract_set)
    target = m.rank(kept | contract_set) - rc
    bases = [
        b & kept
        for b in m.bases
        if (b & contract_set).bit_count() == rc and (b & kept).bit_count() == target
    ]
    return _relabelled(m, kept, bases)[0]


def parallel_classes(m: Matroid) -> list[int]:
    """Parallel classes of the non-loop elements, ordered by smallest member."""
    loops = m.loops()
    seen = loops
    classes = []
    for e in elements(m.ground & ~loops):
        if seen >> e & 1:
            continue
        cls = m.closure(1 << e) & ~loops
        classes.append(cls)
        seen |= cls
    return classes


def is_simple(m: Matroid) -> bool:
    return m.loops() == 0 and all(c.bit_count() == 1 for c in parallel_classes(m))


def simplify(m: Matroid) -> tuple[Matroid, MinorMap]:
    """Remove loops and keep the lowest-indexed member of each parallel class."""
    kept = 0
    for cls in parallel_classes(m):
        kept |= cls & -cls
    if kept == 0:
        return Matroid(0, (0,), 0, m.label), MinorMap.from_kept(0)
    sub, mm = delete(m, m.ground & ~kept)
    return sub.with_label(m.label), mm


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    n = m1.n + m2.n
    _check_capacity(n)
    bases = tuple(sorted(b1 | b2 << m1.n for b1 in m1.bases for b2 in m2.bases))
    label = f"{m1.label}+{m2.label}" if m1.label and m2.label else ""
    return Matroid(n, bases, m1.r + m2.r, label)


def components(m: Matroid) -> list[int]:
    """Connected components, via fundamental circuits of the first basis."""
    parent = list(range(m.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    base = m.bases[0]
    for e in elements(m.ground & ~base):
        for b in elements(base):
            if m.is_basis(base & ~(1 << b) | 1 << e):
                parent[find(b)] = find(e)
    groups: dict[int, int] = {}
    for e in range(m.n):
        root = find(e)
        groups[root] = groups.get(root, 0) | 1 << e
    return sorted(groups.values(), key=lambda c: c & -c)


def is_connected(m: Matroid) -> bool:
    return len(components(m)) <= 1


def _cheap_invariants(m: Matroid) -> tuple:
    return (m.n, m.r, len(m.bases), tuple(sorted(m.element_degrees())))


def _flat_profile(m: Matroid) -> tuple[int, ...]:
    from .lattice import lattice_of_flats

    lat = lattice_of_flats(m)
    return tuple(len(level) for level in lat.by_rank)


def _pair_counts(m: Matroid) -> list[list[int]]:
    pc = [[0] * m.n for _ in range(m.n)]
    for b in m.bases:
        members = to_list(b)
        for i in members:
            row = pc[i]
            for j in members:
                row[j] += 1
    return pc


def find_isomorphism(m1: Matroid, m2: Matroid, _checked: bool = False) -> dict[int, int] | None:
    """A bijection of ground sets carrying bases onto bases, or None."""
    if not _checked:
        if _cheap_invariants(m1) != _cheap_invariants(m2):
            return None
        if _flat_profile(m1) != _flat_profile(m2):
            return None
    n = m1.n
    if n == 0:
        return {}
    pc1, pc2 = _pair_counts(m1), _pair_counts(m2)
    # most constrained first: rare degrees, then index
    deg_count: dict[int, int] = {}
    for e in range(n):
        deg_count[pc1[e][e]] = deg_count.get(pc1[e][e], 0) + 1
    order = sorted(range(n), key=lambda e: (deg_count[pc1[e][e]], e))
    target = m2._basis_set
    mapping: dict[int, int] = {}
    used = [False] * n

    def consistent(e: int, f: int) -> bool:
        if pc1[e][e] != pc2[f][f]:
            return False
        assigned = list(mapping.items())
        for a, fa in assigned:
            if pc1[e][a] != pc2[f][fa]:
                return False
        be, bf = 1 << e, 1 << f
        for i in range(len(assigned)):
            a, fa = assigned[i]
            for j in range(i + 1, len(assigned)):
                b, fb = assigned[j]
                if m1.rank(be | 1 << a | 1 << b) != m2.rank(bf | 1 << fa | 1 << fb):
                    return False
        return True

    def search(k: int) -> bool:
        if k == n:
            for b in m1.bases:
                img = 0
                for e in elements(b):
                    img |= 1 << mapping[e]
                if img not in target:
                    return False
            return True
        e = order[k]
        for f in range(n):
            if not used[f] and consistent(e, f):
                mapping[e] = f
                used[f] = True
                if search(k + 1):
                    return True
                del mapping[e]
                used[f] = False
        return False

    return dict(mapping) if search(0) else None


def are_isomorphic(m1: Matroid, m2: Matroid, witness: bool = False):
    iso = find_isomorphism(m1, m2)
    if witness:
        return iso is not None, iso
    return iso is not None


def has_minor(m: Matroid, n: Matroid) -> bool:
    """Whether some ``M / C \\ D`` is isomorphic to ``n``.

    ``C`` ranges over independent sets of size ``r(M) - r(N)`` and the kept
    set must span ``M / C``; every minor has such a presentation.
    """
    return find_minor(m, n) is not None


def _spanning_minor(m: Matroid, cmask: int, kept: tuple[int, ...], r: int) -> Matroid:
    # bases of M / C restricted to a spanning ``kept``, read from rank lookups;
    # cheaper than filtering every basis of M when ``kept`` is small
    bases = []
    for idx in combinations(range(len(kept)), r):
        s = cmask
        for i in idx:
            s |= 1 << kept[i]
        if m.rank(s) == m.r:
            bases.append(from_elements(idx))
    return Matroid(len(kept), tuple(sorted(bases)), r)


def find_minor(m: Matroid, n: Matroid) -> tuple[int, int] | None:
    """A ``(contract_set, delete_set)`` pair realizing ``n`` as a minor of ``m``, or None."""
    k = m.r - n.r
    if k < 0 or n.n > m.n or (n.n - n.r) > (m.n - m.r):
        return None
    key = _cheap_invariants(n)
    profile = None
    ground = m.ground
    for c in combinations(range(m.n), k):
        cmask = from_elements(c)
        if m.rank(cmask) != k:
            continue
        rest = to_list(ground & ~cmask)
        for x in combinations(rest, n.n):
            xmask = from_elements(x)
            if m.rank(xmask | cmask) != m.r:
                continue
            cand = _spanning_minor(m, cmask, x, n.r)
            if _cheap_invariants(cand) != key:
                continue
            if profile is None:
                profile = _flat_profile(n)
            if _flat_profile(cand) != profile:
                continue
            if find_isomorphism(cand, n, _checked=True) is not None:
                return cmask, ground & ~cmask & ~xmask
    return None


def fano() -> Matroid:
    cols = [v for v in range(1, 8)]
    entries = [[(v >> (2 - i)) & 1 for v in cols] for i in range(3)]
    return matroid_from_matrix(2, 3, 7, entries, label="F7")


def fano_dual() -> Matroid:
    return fano().dual().with_label("F7*")


def excluded_minors_regular() -> list[Matroid]:
    return [uniform(2, 4), fano(), fano_dual()]


def is_regular(m: Matroid) -> bool:
    return not any(has_minor(m, x) for x in excluded_minors_regular())


def find_connected_contraction_element(m: Matroid) -> int:
    """Smallest ``i`` whose contraction simplifies to a connected matroid."""
    if m.r == 0:
        raise RankZero("matroid has rank 0")
    if not is_simple(m):
        raise NotSimple("matroid must be simple")
    if not is_connected(m):
        raise NotConnected("matroid must be connected")
    if m.n == 1:
        # contracting the only element leaves the empty matroid
        return 0
    for i in range(m.n):
        con, _ = contract(m, 1 << i)
        simple, _ = simplify(con)
        if simple.n == 0 or is_connected(simple):
            return i
    # existence is guaranteed for simple connected matroids of positive rank
    raise AssertionError(f"no connected contraction found for {m!r}")
