"""Transfer matrices of tame friezes.

For a tame frieze the k x k windows satisfy F_{i,j+1} = F_{i,j} B_j with B_j
independent of i and of companion shape::

    [0 ... 0  (-1)^(k+1)          ]
    [1 0 .. 0  (-1)^k     c_1     ]
    [  .  .         ...           ]
    [0 .. 1 0      -c_{k-2}       ]
    [0 .. 0 1       c_{k-1}       ]

The tuples (c_1..c_{k-1}) for j = 1..n+k+1 determine the frieze.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import ExactMatrix, as_rational
from .classify import minimal_period
from .errors import ArityMismatch, NonClosing, WildInput
from .frieze import PERIODIC, FriezePattern, periodic


def _last_column_sign(k: int, r: int) -> int:
    # sign of c_r in the last column
    return -1 if (k - 1 - r) % 2 else 1


@dataclass(frozen=True)
class XiSequence:
    k: int
    n: int
    tuples: tuple

    def __post_init__(self):
        if len(self.tuples) != self.n + self.k + 1:
            raise ArityMismatch(
                f"a xi-sequence has n+k+1 = {self.n + self.k + 1} tuples, got {len(self.tuples)}")
        ts = []
        for t in self.tuples:
            if len(t) != self.k - 1:
                raise ArityMismatch(f"tuple {t!r} should have {self.k - 1} entries")
            ts.append(tuple(as_rational(x) for x in t))
        object.__setattr__(self, "tuples", tuple(ts))

    def matrices(self) -> list[ExactMatrix]:
        return [xi_matrix(t, self.k) for t in self.tuples]

    def product(self) -> ExactMatrix:
        p = ExactMatrix.identity(self.k)
        for m in self.matrices():
            p = p @ m
        return p

    def closes(self) -> bool:
        eps = -1 if self.k % 2 == 0 else 1
        return self.product() == ExactMatrix.identity(self.k, eps)

    def rotated(self, shift: int) -> "XiSequence":
        s = shift % len(self.tuples)
        return XiSequence(self.k, self.n, self.tuples[s:] + self.tuples[:s])


def xi_matrix(t: Sequence, k: int) -> ExactMatrix:
    if len(t) != k - 1:
        raise ArityMismatch(f"xi({t!r}) needs {k - 1} coefficients for k={k}")
    m = [[Fraction(0)] * k for _ in range(k)]
    for r in range(1, k):
        m[r][r - 1] = Fraction(1)
    m[0][k - 1] = Fraction(-1 if k % 2 == 0 else 1)
    for r, c in enumerate(t, start=1):
        m[r][k - 1] = _last_column_sign(k, r) * as_rational(c)
    return ExactMatrix.from_rows(m)


def transfer_matrix(f: FriezePattern, i: int, j: int) -> ExactMatrix:
    """B = F_{i,j}^{-1} F_{i,j+1} for k x k windows."""
    return f.window(i, j, f.k).inverse() @ f.window(i, j + 1, f.k)


def xi_tuple(b: ExactMatrix, k: int):
    """Read (c_1..c_{k-1}) off a matrix of xi shape, or ``None`` if the
    shape is wrong."""
    for r in range(k):
        for c in range(k - 1):
            if b[r, c] != (1 if r == c + 1 else 0):
                return None
    if b[0, k - 1] != (-1 if k % 2 == 0 else 1):
        return None
    return tuple(_last_column_sign(k, r) * b[r, k - 1] for r in range(1, k))


def extract_xi(f: FriezePattern, sample_rows: int = 3) -> XiSequence:
    """The xi-sequence of a tame periodic frieze, B_1 .. B_{n+k+1}.

    Each B_j is computed at ``sample_rows`` consecutive rows and must agree.
    """
    if f.mode != PERIODIC:
        raise ValueError("extract_xi needs a periodic frieze")
    k = f.k
    tuples = []
    for j in range(1, f.width + 1):
        ref = None
        for i in range(1, 1 + sample_rows):
            b = transfer_matrix(f, i, j)
            if ref is None:
                ref = b
            elif b != ref:
                raise WildInput(f"B_{j} differs between rows 1 and {i}")
        t = xi_tuple(ref, k)
        if t is None:
            raise WildInput(f"B_{j} is not of xi shape")
        tuples.append(t)
    seq = XiSequence(k, f.n, tuple(tuples))
    if not seq.closes():
        raise WildInput("product of the transfer matrices is not (-1)^(k-1) I")
    return seq


def generate_row(s: XiSequence, i: int) -> list[Fraction]:
    """Entries a[i, i-k .. i+n+k-1] generated from the border seed.

    Column c >= i is produced by the recurrence attached to B_{c-k}.
    """
    k, p = s.k, len(s.tuples)
    eps = -1 if k % 2 == 0 else 1
    vals = [Fraction(0)] * (k - 1) + [Fraction(1)]   # columns i-k .. i-1
    for c in range(i, i + s.n + k):
        j = c - k
        t = s.tuples[(j - 1) % p]
        nxt = eps * vals[-k]
        for r, cr in enumerate(t, start=1):
            nxt += _last_column_sign(k, r) * cr * vals[-k + r]
        vals.append(nxt)
    return vals


def reconstruct(s: XiSequence) -> FriezePattern:
    if not s.closes():
        raise NonClosing("the xi matrices do not multiply to (-1)^(k-1) I")
    k, n, p = s.k, s.n, len(s.tuples)
    rows = []
    for i in range(1, 2 * p + 1):
        vals = generate_row(s, i)
        band, tail = vals[k:k + n], vals[k + n:]
        if tail != [1] + [0] * (k - 1):
            raise NonClosing(f"row {i} does not close with its right border")
        rows.append(tuple(band))
    m = minimal_period(rows, cyclic=True)
    return periodic(k, n, rows[:m])
