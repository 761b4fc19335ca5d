"""SL_k verification, the classification predicates, Sylvester's identity,
the dual frieze and the positivity criterion for genericity."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .frieze import PERIODIC, FriezePattern, window_pattern


@dataclass(frozen=True)
class Witness:
    prop: str
    i: int
    j: int
    size: int
    value: Fraction

    def as_dict(self):
        return {"property": self.prop, "i": self.i, "j": self.j,
                "size": self.size, "value": str(self.value)}


@dataclass
class SLkReport:
    failures: list = field(default_factory=list)
    windows_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class ClassificationReport:
    is_slk: bool
    integral: bool
    nonzero: bool
    positive: bool
    period: Optional[int]
    period_bound: int
    generic: bool
    tame: bool
    witnesses: list = field(default_factory=list)

    @property
    def wild(self) -> bool:
        return not self.tame

    @property
    def periodic(self) -> bool:
        return self.period is not None

    def as_dict(self) -> dict:
        return {
            "is_slk": self.is_slk, "integral": self.integral,
            "nonzero": self.nonzero, "positive": self.positive,
            "period": self.period, "period_bound": self.period_bound,
            "generic": self.generic, "tame": self.tame, "wild": self.wild,
            "witnesses": [w.as_dict() for w in self.witnesses],
        }


# ---------------------------------------------------------------------------
# checking sets
# ---------------------------------------------------------------------------

def columns_for_row(f: FriezePattern, i: int) -> range:
    """One horizontal period of window positions j in [i-k, i+n+1]."""
    return range(i - f.k, i + f.n + 2)


def rows_for_size(f: FriezePattern, size: int) -> range:
    if f.mode == PERIODIC:
        return range(1, len(f.rows) + 1)
    return range(f.first_index, f.last_index - size + 2)


def verify_slk(f: FriezePattern, rows: Optional[Sequence[int]] = None) -> SLkReport:
    k = f.k
    rep = SLkReport()
    for i in (rows_for_size(f, k) if rows is None else rows):
        for j in columns_for_row(f, i):
            d = f.minor(i, j, k)
            rep.windows_checked += 1
            if d != 1:
                rep.failures.append(Witness("slk", i, j, k, d))
    return rep


def _scan_minors(f, size, pred, prop):
    for i in rows_for_size(f, size):
        for j in columns_for_row(f, i):
            d = f.minor(i, j, size)
            if pred(i, j, d):
                return Witness(prop, i, j, size, d)
    return None


def is_tame(f: FriezePattern) -> bool:
    return _scan_minors(f, f.k + 1, lambda i, j, d: d != 0, "tame") is None


# ---------------------------------------------------------------------------
# genericity
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def structural_zero_offsets(k: int, n: int) -> frozenset:
    """Offsets j-i (within one horizontal period) at which a (k-1)x(k-1)
    window vanishes for every choice of band entries.

    Two independent random fillings with large entries are evaluated; an
    offset counts as structurally zero only if both give zero.
    """
    zeros = None
    for seed in (0x5eed, 0xf00d):
        rng = random.Random(seed)
        rows = [[rng.randrange(10**9, 10**12) for _ in range(n)] for _ in range(k - 1)]
        f = window_pattern(k, n, rows, 1)
        here = {d for d in range(-k, n + 2) if f.minor(1, 1 + d, k - 1) == 0}
        zeros = here if zeros is None else zeros & here
    return frozenset(zeros)


def _generic_witness(f: FriezePattern) -> Optional[Witness]:
    size = f.k - 1
    skip = structural_zero_offsets(f.k, f.n)
    for i in rows_for_size(f, size):
        for j in columns_for_row(f, i):
            if j - i in skip:
                continue
            d = f.minor(i, j, size)
            if d == 0:
                return Witness("generic", i, j, size, d)
    return None


def is_generic(f: FriezePattern) -> bool:
    return _generic_witness(f) is None


# ---------------------------------------------------------------------------
# periods
# ---------------------------------------------------------------------------

def minimal_period(rows: Sequence, bound: Optional[int] = None, cyclic: bool = False):
    """Smallest m <= bound with rows[t] == rows[t+m] wherever both exist.

    With ``cyclic`` the sequence is one period of a periodic sequence and
    only divisors of its length are candidates.
    """
    L = len(rows)
    if cyclic:
        for m in range(1, L + 1):
            if L % m == 0 and all(rows[t] == rows[(t + m) % L] for t in range(L)):
                return m
        return L
    bound = L - 1 if bound is None else min(bound, L - 1)
    for m in range(1, bound + 1):
        if all(rows[t] == rows[t + m] for t in range(L - m)):
            return m
    return None


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def classify(f: FriezePattern, period_bound: Optional[int] = None) -> ClassificationReport:
    witnesses = []
    slk = verify_slk(f)
    if slk.failures:
        witnesses.append(slk.failures[0])

    integral = nonzero = positive = True
    for i in f.row_indices():
        for s, c in enumerate(f.band(i), start=1):
            j = i + s - 1
            if integral and c.denominator != 1:
                integral = False
                witnesses.append(Witness("integral", i, j, 1, c))
            if nonzero and c == 0:
                nonzero = False
                witnesses.append(Witness("nonzero", i, j, 1, c))
            if positive and c <= 0:
                positive = False
                witnesses.append(Witness("positive", i, j, 1, c))

    if f.mode == PERIODIC:
        period = minimal_period(f.rows, cyclic=True)
        bound = len(f.rows)
    else:
        bound = len(f.rows) - 1 if period_bound is None else period_bound
        period = minimal_period(f.rows, bound)

    gw = _generic_witness(f)
    if gw is not None:
        witnesses.append(gw)
    tw = _scan_minors(f, f.k + 1, lambda i, j, d: d != 0, "tame")
    if tw is not None:
        witnesses.append(tw)

    witnesses.sort(key=lambda w: (w.i, w.j, w.size, w.prop))
    return ClassificationReport(
        is_slk=slk.ok, integral=integral, nonzero=nonzero, positive=positive,
        period=period, period_bound=bound, generic=gw is None,
        tame=slk.ok and tw is None, witnesses=witnesses)


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------

def _minor(source, i, j, size):
    if size == 0:
        return Fraction(1)
    return source.minor(i, j, size)


def sylvester_residual(source, i: int, j: int, size: int) -> Fraction:
    """D^{l+1}_{i,j} D^{l-1}_{i+1,j+1} - (D^l_{i,j} D^l_{i+1,j+1} - D^l_{i+1,j} D^l_{i,j+1}).

    ``source`` is anything with a 1-based ``minor(i, j, size)``: a frieze
    or an :class:`~slkfrieze.arith.ExactMatrix`.
    """
    if size < 1:
        raise ValueError("Sylvester's identity needs l >= 1")
    m = _minor
    lhs = m(source, i, j, size + 1) * m(source, i + 1, j + 1, size - 1)
    rhs = (m(source, i, j, size) * m(source, i + 1, j + 1, size)
           - m(source, i + 1, j, size) * m(source, i, j + 1, size))
    return lhs - rhs


def corner_positivity_holds(f: FriezePattern, i: int, j: int, size: int) -> Optional[bool]:
    """If the five hypothesis minors are positive, whether D^l_{i+1,j+1} is
    positive too; ``None`` when the hypothesis fails."""
    hyp = [f.minor(i, j, size), f.minor(i + 1, j, size), f.minor(i, j + 1, size),
           f.minor(i, j, size + 1), _minor(f, i + 1, j + 1, size - 1)]
    if not all(h > 0 for h in hyp):
        return None
    return f.minor(i + 1, j + 1, size) > 0


# ---------------------------------------------------------------------------
# dual frieze
# ---------------------------------------------------------------------------

def dual(f: FriezePattern) -> FriezePattern:
    """The frieze of (k-1)x(k-1) adjacent minors.

    Row i of the dual has band D^{k-1}_{i,j} for j = i..i+n-1; its border
    ones and zero runs sit in the same places as in ``f``.
    """
    size = f.k - 1
    rows = [tuple(f.minor(i, j, size) for j in range(i, i + f.n))
            for i in f.row_indices() if f.mode == PERIODIC or i + size - 1 <= f.last_index]
    return f.with_rows(rows)


def dual_minors(f: FriezePattern) -> dict:
    """D^{k-1}_{i,j} over one vertical period and two horizontal periods."""
    size = f.k - 1
    w = f.width
    return {(i, j): f.minor(i, j, size)
            for i in rows_for_size(f, size) for j in range(i - w, i + w + 1)}


def locate_dual_offset(f: FriezePattern, minors: Optional[dict] = None):
    """Find (s, t) with D^{k-1}_{i,j} = a_{j+t, i+s} on every computed cell."""
    if f.mode != PERIODIC:
        raise ValueError("the offset search needs a periodic frieze")
    minors = dual_minors(f) if minors is None else minors
    w = f.width
    cells = sorted(minors.items())
    for s in range(-w, w + 1):
        for t in range(-w, w + 1):
            if all(f.entry(j + t, i + s) == v for (i, j), v in cells):
                return (s, t)
    return None


# ---------------------------------------------------------------------------
# positivity lemma
# ---------------------------------------------------------------------------

def lemma_hypothesis(f: FriezePattern) -> bool:
    return all(f.minor(1, j, size) > 0
               for size in range(1, f.k) for j in range(1, f.n + 1))


def lemma_check(f: FriezePattern) -> tuple[bool, bool]:
    return lemma_hypothesis(f), is_generic(f)
