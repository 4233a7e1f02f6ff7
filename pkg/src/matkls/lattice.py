"""Lattices of flats and their order invariants.

Flats are closed bitmasks of the matroid's own ground set (loops sit in the
bottom flat), indexed by rank and then by mask value. Intervals ``[F, G]`` are
never materialized as separate lattices; every interval invariant walks the
index lists directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from . import _kernels
from .bits import popcount
from .errors import InconsistentModularityChecks, NotComparable
from .matroid import Matroid
from .poly import IntPoly


@dataclass(eq=False)
class FlatLattice:
    flats: list[int]
    ranks: list[int]
    matroid: Matroid | None = None
    index: dict[int, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {f: i for i, f in enumerate(self.flats)}

    @property
    def r(self) -> int:
        return self.ranks[self.top]

    @cached_property
    def by_rank(self) -> list[list[int]]:
        levels: list[list[int]] = [[] for _ in range(max(self.ranks) + 1)]
        for i, rk in enumerate(self.ranks):
            levels[rk].append(i)
        return levels

    @cached_property
    def bottom(self) -> int:
        return min(range(len(self.flats)), key=lambda i: (self.ranks[i], popcount(self.flats[i])))

    @cached_property
    def top(self) -> int:
        return max(range(len(self.flats)), key=lambda i: (self.ranks[i], popcount(self.flats[i])))

    @cached_property
    def up(self) -> list[list[int]]:
        """``up[i]``: indices ``j`` with flat i contained in flat j, in index (rank) order."""
        return _kernels.containment_lists(self.flats)

    @cached_property
    def covers(self) -> list[list[int]]:
        """Upper covers of every element."""
        out = []
        for i, ups in enumerate(self.up):
            above = [j for j in ups if j != i]
            if self.matroid is not None:
                out.append([j for j in above if self.ranks[j] == self.ranks[i] + 1])
            else:
                out.append([j for j in above if not any(k != j and self.leq(k, j) for k in above)])
        return out

    def __len__(self) -> int:
        return len(self.flats)

    def leq(self, i: int, j: int) -> bool:
        return self.flats[i] & ~self.flats[j] == 0

    def interval(self, i: int, j: int) -> list[int]:
        """Indices of ``[F_i, F_j]`` in rank order."""
        if not self.leq(i, j):
            raise NotComparable(f"flat {i} is not below flat {j}")
        g = self.flats[j]
        return [k for k in self.up[i] if self.flats[k] & ~g == 0]

    def atoms(self) -> list[int]:
        return [j for j in self.up[self.bottom] if self.ranks[j] == self.ranks[self.bottom] + 1]

    def atoms_below(self, i: int) -> list[int]:
        f = self.flats[i]
        return [a for a in self.atoms() if self.flats[a] & ~f == 0]

    def join(self, i: int, j: int) -> int:
        union = self.flats[i] | self.flats[j]
        if self.matroid is not None:
            return self.index[self.matroid.closure(union)]
        uppers = [k for k in range(len(self.flats)) if union & ~self.flats[k] == 0]
        least = [k for k in uppers if all(self.flats[k] & ~self.flats[m] == 0 for m in uppers)]
        if len(least) != 1:
            raise ValueError("family has no least upper bound for this pair")
        return least[0]

    def meet(self, i: int, j: int) -> int:
        inter = self.flats[i] & self.flats[j]
        if inter in self.index:
            return self.index[inter]
        lowers = [k for k in range(len(self.flats)) if self.flats[k] & ~inter == 0]
        greatest = [k for k in lowers if all(self.flats[m] & ~self.flats[k] == 0 for m in lowers)]
        if len(greatest) != 1:
            raise ValueError("family has no greatest lower bound for this pair")
        return greatest[0]

    @cached_property
    def _mobius_rows(self) -> list[dict[int, int]]:
        rows = []
        for i in range(len(self.flats)):
            row: dict[int, int] = {}
            above = self.up[i]
            for g in above:
                if g == i:
                    row[g] = 1
                    continue
                fg = self.flats[g]
                row[g] = -sum(v for h, v in row.items() if self.flats[h] & ~fg == 0)
            rows.append(row)
        return rows

    def mobius(self, i: int, j: int) -> int:
        return self._mobius_rows[i].get(j, 0)

    def characteristic_polynomial(self, i: int | None = None, j: int | None = None) -> IntPoly:
        i = self.bottom if i is None else i
        j = self.top if j is None else j
        if not self.leq(i, j):
            raise NotComparable(f"flat {i} is not below flat {j}")
        rg = self.ranks[j]
        coeffs = [0] * (rg - self.ranks[i] + 1)
        g = self.flats[j]
        for h, mu in self._mobius_rows[i].items():
            if self.flats[h] & ~g == 0:
                coeffs[rg - self.ranks[h]] += mu
        return IntPoly(coeffs)


def lattice_of_flats(m: Matroid) -> FlatLattice:
    """Flats of ``m`` built rank by rank from closures of ``F + e``."""
    bottom = m.closure(0)
    levels = [[bottom]]
    seen = {bottom}
    while True:
        nxt = set()
        for f in levels[-1]:
            rest = m.ground & ~f
            while rest:
                low = rest & -rest
                rest ^= low
                g = m.closure(f | low)
                rest &= ~g
                if g not in seen:
                    seen.add(g)
                    nxt.add(g)
        if not nxt:
            break
        levels.append(sorted(nxt))
    flats, ranks = [], []
    for rk, level in enumerate(levels):
        flats.extend(level)
        ranks.extend([rk] * len(level))
    return FlatLattice(flats, ranks, m)


def from_family(sets, ranks=None) -> FlatLattice:
    """Lattice of an arbitrary family of bitmasks ordered by inclusion.

    Ranks default to the longest chain length from the minimum.
    """
    sets = list(sets)
    if ranks is None:
        order = sorted(range(len(sets)), key=lambda k: popcount(sets[k]))
        rk = {}
        for k in order:
            below = [rk[m] for m in rk if sets[m] & ~sets[k] == 0 and sets[m] != sets[k]]
            rk[k] = 1 + max(below) if below else 0
        ranks = [rk[k] for k in range(len(sets))]
    order = sorted(range(len(sets)), key=lambda k: (ranks[k], sets[k]))
    return FlatLattice([sets[k] for k in order], [ranks[k] for k in order])


mobius = FlatLattice.mobius
characteristic_polynomial = FlatLattice.characteristic_polynomial


def join(lat: FlatLattice, i: int, j: int) -> int:
    return lat.join(i, j)


def meet(lat: FlatLattice, i: int, j: int) -> int:
    return lat.meet(i, j)


@dataclass(frozen=True)
class WhitneyTable:
    w: tuple[tuple[int, ...], ...]
    W: tuple[tuple[int, ...], ...]

    @property
    def w1(self) -> tuple[int, ...]:
        return self.w[0]

    @property
    def W1(self) -> tuple[int, ...]:
        return self.W[0]


def whitney_table(lat: FlatLattice) -> WhitneyTable:
    """Doubly-indexed Whitney numbers of both kinds.

    Row 0 holds the ordinary Whitney numbers; ranks are measured from the bottom flat.
    """
    base = lat.ranks[lat.bottom]
    size = lat.r - base + 1
    w = [[0] * size for _ in range(size)]
    W = [[0] * size for _ in range(size)]
    for i in range(len(lat)):
        ri = lat.ranks[i] - base
        for j, mu in lat._mobius_rows[i].items():
            rj = lat.ranks[j] - base
            w[ri][rj] += mu
            W[ri][rj] += 1
    return WhitneyTable(tuple(map(tuple, w)), tuple(map(tuple, W)))


def is_modular_lattice(lat: FlatLattice) -> bool:
    """Rank modularity over all pairs, cross-checked against ``W_1 == W_{r-1}``."""
    flats, ranks = lat.flats, lat.ranks
    m = lat.matroid
    modular = True
    for i in range(len(flats)):
        for j in range(i + 1, len(flats)):
            if m is not None:
                rj = m.rank(flats[i] | flats[j])
                rm = m.rank(flats[i] & flats[j])
            else:
                rj = ranks[lat.join(i, j)]
                rm = ranks[lat.meet(i, j)]
            if ranks[i] + ranks[j] != rj + rm:
                modular = False
                break
        if not modular:
            break
    levels = lat.by_rank
    r = lat.r
    if r >= 1:
        shortcut = len(levels[1]) == len(levels[r - 1])
        if shortcut != modular:
            raise InconsistentModularityChecks(
                f"pairwise rank test says {modular}, hyperplane count test says {shortcut}"
            )
    return modular


def is_projective_geometry(lat: FlatLattice) -> bool:
    """Every rank-2 flat has at least three atoms and meets every hyperplane."""
    base = lat.ranks[lat.bottom]
    r = lat.r - base
    lines = [i for i in range(len(lat)) if lat.ranks[i] - base == 2]
    hyperplanes = [i for i in range(len(lat)) if lat.ranks[i] - base == r - 1]
    for line in lines:
        if len(lat.atoms_below(line)) < 3:
            return False
        for h in hyperplanes:
            if lat.meet(line, h) == lat.bottom:
                return False
    return True


def check_geometric(lat: FlatLattice) -> list[str]:
    """Violations of atomicity and semimodularity (empty for a geometric lattice)."""
    problems = []
    atoms = lat.atoms()
    for i in range(len(lat)):
        if i == lat.bottom:
            continue
        below = [a for a in atoms if lat.leq(a, i)]
        acc = lat.bottom
        for a in below:
            acc = lat.join(acc, a)
        if acc != i:
            problems.append(f"atomicity: element {i} is not the join of its atoms")
    for i in range(len(lat)):
        for j in range(i + 1, len(lat)):
            lhs = lat.ranks[i] + lat.ranks[j]
            rhs = lat.ranks[lat.join(i, j)] + lat.ranks[lat.meet(i, j)]
            if lhs < rhs:
                problems.append(f"semimodularity: elements {i}, {j} give {lhs} < {rhs}")
    return problems
