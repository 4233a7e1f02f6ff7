"""Exact integer polynomials in one and two variables.

Coefficients are Python ints stored in ascending degree order. Both classes are
immutable and kept in normal form (no trailing zeros), so equality is structural.
"""

from __future__ import annotations

from itertools import zip_longest

from .errors import DegreeExceedsRank


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return (IntPoly, (self.coeffs,))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPoly:
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def coeff(self, i: int) -> int:
        return self[i]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly(other)
        return IntPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly(other)
        return self + (-other)

    def __rsub__(self, other) -> IntPoly:
        return IntPoly(other) - self

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPoly:
        out = IntPoly(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reverse(self, r: int) -> IntPoly:
        return reverse(self, r)

    def shift(self, k: int) -> IntPoly:
        """Multiply by ``t**k``."""
        return IntPoly([0] * k + list(self.coeffs)) if self.coeffs else self

    def truncate(self, k: int) -> IntPoly:
        """Terms of degree below ``k``."""
        return IntPoly(self.coeffs[:k])

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if mag == 1 and i else str(mag)
            if i == 1:
                body += "t"
            elif i > 1:
                body += f"t^{i}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def reverse(p: IntPoly, r: int) -> IntPoly:
    """``t**r * p(1/t)``."""
    if p.degree > r:
        raise DegreeExceedsRank(f"degree {p.degree} exceeds {r}")
    padded = list(p.coeffs) + [0] * (r + 1 - len(p.coeffs))
    return IntPoly(reversed(padded))


class IntPoly2:
    """Bivariate polynomial; ``coeffs[i][j]`` multiplies ``x**i * y**j``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        rows = [list(map(int, row)) for row in coeffs]
        width = 0
        for row in rows:
            for j, c in enumerate(row):
                if c:
                    width = max(width, j + 1)
        rows = [tuple(row[:width]) + (0,) * (width - len(row[:width])) for row in rows]
        while rows and not any(rows[-1]):
            rows.pop()
        object.__setattr__(self, "coeffs", tuple(rows) if width else ())

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly2 is immutable")

    def __reduce__(self):
        return (IntPoly2, (self.coeffs,))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if 0 <= i < len(self.coeffs) and 0 <= j < len(self.coeffs[i]):
            return self.coeffs[i][j]
        return 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntPoly2):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def terms(self) -> dict[tuple[int, int], int]:
        return {(i, j): c for i, row in enumerate(self.coeffs) for j, c in enumerate(row) if c}

    def __call__(self, x, y):
        acc = 0
        for row in reversed(self.coeffs):
            inner = 0
            for c in reversed(row):
                inner = inner * y + c
            acc = acc * x + inner
        return acc

    def substitute(self, x: IntPoly, y: IntPoly) -> IntPoly:
        """Compose with univariate polynomials ``x(t)``, ``y(t)``."""
        return self(x, y) if self.coeffs else IntPoly()

    def __repr__(self) -> str:
        return f"IntPoly2({[list(row) for row in self.coeffs]})"

    def __str__(self) -> str:
        parts = []
        for (i, j), c in sorted(self.terms().items(), reverse=True):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"
