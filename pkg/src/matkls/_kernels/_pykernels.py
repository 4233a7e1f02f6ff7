"""Pure-Python bitmask kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when the
extension is not built or ``MATKLS_PURE_PYTHON`` is set.
"""

from __future__ import annotations


def rank_table(n: int, bases) -> bytearray:
    """Rank of every subset of an ``n``-element ground set, indexed by bitmask."""
    size = 1 << n
    indep = bytearray(size)
    for b in bases:
        indep[b] = 1
    # downward closure: S is independent iff some one-element extension is
    for s in range(size - 1, -1, -1):
        if indep[s]:
            continue
        free = ~s & (size - 1)
        while free:
            low = free & -free
            if indep[s | low]:
                indep[s] = 1
                break
            free ^= low
    ranks = bytearray(size)
    for s in range(1, size):
        if indep[s]:
            ranks[s] = s.bit_count()
            continue
        best = 0
        rest = s
        while rest:
            low = rest & -rest
            v = ranks[s ^ low]
            if v > best:
                best = v
            rest ^= low
        ranks[s] = best
    return ranks


def max_intersection(bases, mask: int) -> int:
    """Largest ``|B & mask|`` over the given bases."""
    best = 0
    for b in bases:
        c = (b & mask).bit_count()
        if c > best:
            best = c
    return best


def tutte_counts(ranks, n: int, r: int) -> list[list[int]]:
    """Tally subsets A by (r - rank A, |A| - rank A)."""
    counts = [[0] * (n - r + 1) for _ in range(r + 1)]
    for s in range(1 << n):
        rk = ranks[s]
        counts[r - rk][s.bit_count() - rk] += 1
    return counts


def containment_lists(masks) -> list[list[int]]:
    """For each mask ``i``, the indices ``j`` (in input order) with ``masks[i] ⊆ masks[j]``."""
    out = []
    for a in masks:
        out.append([j for j, b in enumerate(masks) if a & ~b == 0])
    return out
