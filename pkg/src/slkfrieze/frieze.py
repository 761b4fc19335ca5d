"""The banded bi-infinite array of an SL_k-frieze.

Row ``i`` carries band entries ``c[i][1..n]``, placed so that
``a[i, i-1+s] = c[i][s]``.  Every row reads::

    ... 0 0 | 1  c_1 ... c_n  1 | 0 ... 0 (k-1 zeros) | eps*1  eps*c_1 ...

and repeats horizontally with period ``n+k+1``, each repetition multiplied
by ``eps = (-1)**(k-1)``.

Two vertical modes exist.  ``periodic`` stores one vertical period of band
rows (rows 1..m) and answers every row index.  ``window`` stores finitely
many consecutive rows starting at ``first_index``; asking for any other row
raises :class:`RowOutOfRange`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .arith import ExactMatrix, as_rational, det_rows
from .errors import RowOutOfRange, ShapeMismatch

PERIODIC = "periodic"
WINDOW = "window"

Row = tuple  # tuple[Fraction, ...]


def band_entry(k: int, n: int, band: Sequence, i: int, j: int):
    """a[i, j] for a row i whose band is ``band``."""
    q, r = divmod(j - i + 1, n + k + 1)
    if r == 0 or r == n + 1:
        v = 1
    elif r <= n:
        v = band[r - 1]
    else:
        return 0
    if q % 2 and k % 2 == 0:
        return -v
    return v


@dataclass(frozen=True)
class FriezePattern:
    k: int
    n: int
    rows: tuple
    mode: str = PERIODIC
    first_index: int = 1
    name: Optional[str] = field(default=None, compare=False)
    source: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.k < 2:
            raise ShapeMismatch(f"k must be at least 2, got {self.k}")
        if self.n < 1:
            raise ShapeMismatch(f"height must be at least 1, got {self.n}")
        if self.mode not in (PERIODIC, WINDOW):
            raise ShapeMismatch(f"unknown vertical mode {self.mode!r}")
        if not self.rows:
            raise ShapeMismatch("a frieze needs at least one band row")
        rows = []
        for idx, r in enumerate(self.rows):
            r = tuple(as_rational(x) for x in r)
            if len(r) != self.n:
                raise ShapeMismatch(
                    f"band row {idx} has {len(r)} entries, expected {self.n}")
            rows.append(r)
        object.__setattr__(self, "rows", tuple(rows))
        if self.mode == PERIODIC:
            object.__setattr__(self, "first_index", 1)

    # -- derived quantities --------------------------------------------------

    @property
    def eps(self) -> int:
        return -1 if self.k % 2 == 0 else 1

    @property
    def width(self) -> int:
        """Horizontal glide period n+k+1."""
        return self.n + self.k + 1

    @property
    def period(self) -> Optional[int]:
        return len(self.rows) if self.mode == PERIODIC else None

    @property
    def last_index(self) -> int:
        """Last stored row index (window mode) / last row of the stored period."""
        return self.first_index + len(self.rows) - 1

    def row_indices(self) -> range:
        return range(self.first_index, self.last_index + 1)

    def has_row(self, i: int) -> bool:
        return self.mode == PERIODIC or self.first_index <= i <= self.last_index

    def band(self, i: int) -> Row:
        if self.mode == PERIODIC:
            return self.rows[(i - 1) % len(self.rows)]
        if not self.first_index <= i <= self.last_index:
            raise RowOutOfRange(
                f"row {i} outside stored rows {self.first_index}..{self.last_index}")
        return self.rows[i - self.first_index]

    # -- the array -----------------------------------------------------------

    def entry(self, i: int, j: int) -> Fraction:
        """The array entry a[i, j]."""
        if self.mode == PERIODIC:
            band = self.rows[(i - 1) % len(self.rows)]
        elif self.first_index <= i <= self.last_index:
            band = self.rows[i - self.first_index]
        else:
            raise RowOutOfRange(
                f"row {i} outside stored rows {self.first_index}..{self.last_index}")
        return band_entry(self.k, self.n, band, i, j)

    def window_rows(self, i: int, j: int, size: int) -> list[list[Fraction]]:
        return [[self.entry(r, c) for c in range(j, j + size)]
                for r in range(i, i + size)]

    def window(self, i: int, j: int, size: int) -> ExactMatrix:
        """The size x size block with top-left entry a[i, j]."""
        if size < 0:
            raise ValueError("window size must be nonnegative")
        return ExactMatrix.from_rows(self.window_rows(i, j, size))

    def minor(self, i: int, j: int, size: int) -> Fraction:
        if size == 0:
            return Fraction(1)
        return det_rows(self.window_rows(i, j, size))

    # -- misc ------------------------------------------------------------------

    def with_rows(self, rows: Sequence[Iterable], mode: Optional[str] = None,
                  first_index: Optional[int] = None) -> "FriezePattern":
        return FriezePattern(self.k, self.n, tuple(tuple(r) for r in rows),
                             mode or self.mode,
                             self.first_index if first_index is None else first_index,
                             self.name, self.source)

    def is_integral_rows(self) -> bool:
        return all(x.denominator == 1 for r in self.rows for x in r)


def same_array(f: FriezePattern, g: FriezePattern) -> bool:
    """Entrywise equality of the two arrays (periodic friezes may store
    different multiples of their period)."""
    if (f.k, f.n, f.mode) != (g.k, g.n, g.mode):
        return False
    if f.mode == WINDOW:
        return f.first_index == g.first_index and f.rows == g.rows
    m = len(f.rows) * len(g.rows)
    return all(f.band(i) == g.band(i) for i in range(1, m + 1))


def from_band_rows(k: int, n: int, rows: Sequence[Iterable], mode: str = PERIODIC,
                   first_index: int = 1, name: str | None = None,
                   source: str | None = None) -> FriezePattern:
    rows = tuple(tuple(r) for r in rows)
    return FriezePattern(k, n, rows, mode, first_index, name, source)


def periodic(k: int, n: int, rows: Sequence[Iterable], **kw) -> FriezePattern:
    return from_band_rows(k, n, rows, PERIODIC, **kw)


def window_pattern(k: int, n: int, rows: Sequence[Iterable], first_index: int = 1,
                   **kw) -> FriezePattern:
    return from_band_rows(k, n, rows, WINDOW, first_index, **kw)


# ---------------------------------------------------------------------------
# printed arrays
# ---------------------------------------------------------------------------

def parse_printed(k: int, n: int, printed: Sequence[Sequence]):
    """Read band rows off a rectangular printed block of an array.

    The printed block shows consecutive rows; the column of the first row's
    left border 1 is not given, so every phase modulo n+k+1 is tried.  Each
    band entry is read from any printed column congruent to its position
    (undoing the glide sign), and a phase is accepted only if the resulting
    pattern reproduces *every* printed cell.  Returns ``(rows, phase)``
    where ``phase`` is the 0-based printed column of the first row's left
    border.

    Entries may be numbers or opaque tokens (tokens only when eps = +1).
    """
    width = n + k + 1
    eps = -1 if k % 2 == 0 else 1
    ncols = len(printed[0])
    if any(len(r) != ncols for r in printed):
        raise ShapeMismatch("printed block is ragged")

    def sign(v, q):
        return -v if (q % 2 and eps == -1) else v

    found = []
    for phase in range(width):
        rows = []
        ok = True
        for r, line in enumerate(printed):
            border = phase + r
            band = [None] * n
            for col, val in enumerate(line):
                q, off = divmod(col - border, width)
                expect_fixed = None
                if off == 0 or off == n + 1:
                    expect_fixed = 1
                elif off > n + 1:
                    expect_fixed = 0
                if expect_fixed is not None:
                    if val != sign(expect_fixed, q):
                        ok = False
                        break
                    continue
                v = sign(val, q)
                if band[off - 1] is None:
                    band[off - 1] = v
                elif band[off - 1] != v:
                    ok = False
                    break
            if not ok or any(b is None for b in band):
                ok = False
                break
            rows.append(tuple(band))
        if ok:
            found.append((rows, phase))
    if len(found) != 1:
        raise ShapeMismatch(
            f"printed block admits {len(found)} consistent border phases, expected 1")
    return found[0]
