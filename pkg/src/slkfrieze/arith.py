"""Exact arithmetic: rationals, the ring Q(sqrt 80), small exact matrices.

Rationals are :class:`fractions.Fraction`; nothing in this package ever
touches a float.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational as _RationalABC
from typing import Iterable, Optional, Sequence, Union

from .errors import NonSquare, ZeroInverse

Rational = Fraction
Number = Union[int, Fraction]

RADICAND = 80


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational entry")
    if isinstance(x, (int, str)) or isinstance(x, _RationalABC):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def _bareiss(m: list[list[int]]) -> int:
    # in-place on a fresh integer copy
    n = len(m)
    sign = 1
    prev = 1
    for c in range(n - 1):
        if m[c][c] == 0:
            for r in range(c + 1, n):
                if m[r][c] != 0:
                    m[c], m[r] = m[r], m[c]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[c][c]
        row_c = m[c]
        for r in range(c + 1, n):
            row_r = m[r]
            f = row_r[c]
            for s in range(c + 1, n):
                row_r[s] = (piv * row_r[s] - f * row_c[s]) // prev
            row_r[c] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def det_rows(rows: Sequence[Sequence[Number]]) -> Fraction:
    """Exact determinant of a square list-of-rows.

    Rows are lifted to integers by their common denominators, then reduced
    with fraction-free (Bareiss) elimination.  The empty matrix has
    determinant 1.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NonSquare(f"matrix is not square: {n} rows, lengths {[len(r) for r in rows]}")
    if n == 0:
        return Fraction(1)
    scale = 1
    lifted = []
    for row in rows:
        den = 1
        for x in row:
            if type(x) is not int:
                den = lcm(den, x.denominator)
        if den == 1:
            lifted.append([int(x) for x in row])
        else:
            lifted.append([int(x * den) for x in row])
            scale *= den
    if n == 1:
        return Fraction(lifted[0][0], scale)
    return Fraction(_bareiss(lifted), scale)


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "ExactMatrix":
        rows = [[as_rational(x) for x in r] for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int, scale: Number = 1) -> "ExactMatrix":
        s = as_rational(scale)
        return cls(n, n, tuple(s if r == c else Fraction(0)
                               for r in range(n) for c in range(n)))

    def __getitem__(self, rc: tuple[int, int]) -> Fraction:
        r, c = rc
        return self.entries[r * self.cols + c]

    def row_lists(self) -> list[list[Fraction]]:
        return [list(self.entries[r * self.cols:(r + 1) * self.cols])
                for r in range(self.rows)]

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.cols, self.rows, tuple(
            self[r, c] for c in range(self.cols) for r in range(self.rows)))

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        a, b = self.row_lists(), other.row_lists()
        out = []
        for r in range(self.rows):
            for c in range(other.cols):
                out.append(sum((a[r][t] * b[t][c] for t in range(self.cols)), Fraction(0)))
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def inverse(self) -> "ExactMatrix":
        """Gauss-Jordan inverse over the rationals."""
        if self.rows != self.cols:
            raise NonSquare("only square matrices have inverses")
        n = self.rows
        aug = [row + [Fraction(int(r == c)) for c in range(n)]
               for r, row in enumerate(self.row_lists())]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
            if piv is None:
                raise ZeroInverse("singular matrix")
            aug[c], aug[piv] = aug[piv], aug[c]
            p = aug[c][c]
            aug[c] = [x / p for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    f = aug[r][c]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
        return ExactMatrix(n, n, tuple(x for row in aug for x in row[n:]))

    def minor(self, i: int, j: int, size: int) -> Fraction:
        """Determinant of the contiguous ``size`` x ``size`` block with
        top-left corner at 1-based position (i, j)."""
        if i < 1 or j < 1 or i + size - 1 > self.rows or j + size - 1 > self.cols:
            raise IndexError(f"block ({i},{j}) of size {size} leaves the matrix")
        return det_rows([[self[r, c] for c in range(j - 1, j - 1 + size)]
                         for r in range(i - 1, i - 1 + size)])


def det_exact(m: ExactMatrix) -> Fraction:
    if m.rows != m.cols:
        raise NonSquare(f"{m.rows}x{m.cols} matrix has no determinant")
    return det_rows(m.row_lists())


# ---------------------------------------------------------------------------
# Q(sqrt 80)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadNumber:
    """``a + b*sqrt(80)`` with rational a, b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    @staticmethod
    def _coerce(x) -> "QuadNumber":
        if isinstance(x, QuadNumber):
            return x
        return QuadNumber(as_rational(x), Fraction(0))

    def __add__(self, other):
        o = self._coerce(other)
        return QuadNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return QuadNumber(self.a * o.a + RADICAND * self.b * o.b,
                          self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def conj(self) -> "QuadNumber":
        return QuadNumber(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - RADICAND * self.b * self.b

    def inverse(self) -> "QuadNumber":
        nrm = self.norm()
        if nrm == 0:
            # sqrt(80) is irrational, so the norm vanishes only at zero
            raise ZeroInverse("0 has no inverse in Q(sqrt 80)")
        c = self.conj()
        return QuadNumber(c.a / nrm, c.b / nrm)

    def __pow__(self, e: int) -> "QuadNumber":
        if e < 0:
            return self.inverse() ** (-e)
        result = QuadNumber(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt(80)"


W = QuadNumber(9, 1)


def qf_add(x: QuadNumber, y: QuadNumber) -> QuadNumber:
    return x + y


def qf_mul(x: QuadNumber, y: QuadNumber) -> QuadNumber:
    return x * y


def qf_conj(x: QuadNumber) -> QuadNumber:
    return x.conj()


def qf_pow(x: QuadNumber, e: int) -> QuadNumber:
    return x ** e


def qf_as_integer(x: QuadNumber) -> Optional[int]:
    if x.b != 0 or x.a.denominator != 1:
        return None
    return x.a.numerator
