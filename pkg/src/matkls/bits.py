"""Subsets of a ground set ``{0..n-1}`` as plain ``int`` bitmasks."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

MAX_ELEMENTS = 32


def full(n: int) -> int:
    return (1 << n) - 1


def from_elements(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def elements(mask: int) -> Iterator[int]:
    """Members of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: int) -> list[int]:
    return list(elements(mask))


def popcount(mask: int) -> int:
    return mask.bit_count()


def complement(mask: int, n: int) -> int:
    return full(n) & ~mask


def compress(mask: int, kept: int) -> int:
    """Renumber the members of ``mask & kept`` by their position inside ``kept``."""
    out = 0
    pos = 0
    for e in elements(kept):
        if mask >> e & 1:
            out |= 1 << pos
        pos += 1
    return out


def expand(mask: int, kept: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    for pos, e in enumerate(elements(kept)):
        if mask >> pos & 1:
            out |= 1 << e
    return out


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    from itertools import combinations

    for combo in combinations(to_list(mask), k):
        yield from_elements(combo)
