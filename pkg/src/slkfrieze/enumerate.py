"""Exhaustive enumeration of tame integral positive SL_k-friezes of small height.

Two independent searches are provided.

``xi_search`` (the main one) runs a depth-first search over the xi tuples
c(1), ..., c(p), p = n+k+1.  Fixing a prefix c(1..J) already determines
part of many rows: rows whose first tuple lies in the prefix are grown to
the right from their left border, rows whose last tuple lies in the prefix
are grown to the left from their right border.  Every band entry met on
the way must be a positive integer and every border cell must be 1 or 0.
The last coordinate of each new tuple is solved as an interval from the
rightward rows.  Leaves are accepted if the tuples close up and the
reconstructed frieze is positive.

``row_scan`` (the oracle) scans the first k-1 band rows and continues
them row by row with :func:`slkfrieze.wild.continue_row`.

Both are run over a sweep of bounds until two consecutive counts agree.
For ``xi_search`` the bound caps the tuple entries; for ``row_scan`` it
caps the band entries of the scanned rows.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .classify import is_tame
from .errors import BudgetExhausted, NonClosing
from .frieze import FriezePattern, periodic
from .wild import UNIQUE, ExactRational, continue_row
from .xi import XiSequence, reconstruct

PATTERN_EQUALITY = "pattern"
SHIFT_EQUIVALENCE = "shift"
CONVENTIONS = (PATTERN_EQUALITY, SHIFT_EQUIVALENCE)

DEFAULT_SCHEDULE = (8, 16, 32, 64)


@dataclass
class EnumerationResult:
    k: int
    n: int
    convention: str
    algorithm: str
    bound_schedule: list = field(default_factory=list)
    count_per_bound: list = field(default_factory=list)
    stabilized: bool = False
    friezes: list = field(default_factory=list)
    budget_spent: float = 0.0
    complete: bool = True

    @property
    def count(self) -> Optional[int]:
        if not self.complete or not self.count_per_bound:
            return None
        return self.count_per_bound[-1]

    def as_dict(self, max_friezes: int = 0) -> dict:
        out = {
            "k": self.k, "n": self.n, "convention": self.convention,
            "algorithm": self.algorithm, "complete": self.complete,
            "bound_schedule": list(self.bound_schedule),
            "count_per_bound": list(self.count_per_bound),
            "stabilized": self.stabilized, "count": self.count,
            "budget_spent": round(self.budget_spent, 3),
        }
        if max_friezes:
            out["friezes"] = [[[str(x) for x in r] for r in rows]
                              for rows in self.friezes[:max_friezes]]
        return out


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def full_period_rows(f: FriezePattern) -> tuple:
    """Band rows 1..n+k+1 of a tame frieze, as ints."""
    p = f.width
    return tuple(tuple(int(x) for x in f.band(i)) for i in range(1, p + 1))


def canonical(rows: tuple, convention: str) -> tuple:
    if convention == PATTERN_EQUALITY:
        return rows
    if convention == SHIFT_EQUIVALENCE:
        return min(rows[s:] + rows[:s] for s in range(len(rows)))
    raise ValueError(f"unknown convention {convention!r}")


def canonical_set(row_sets, convention: str) -> list:
    return sorted({canonical(r, convention) for r in row_sets})


# ---------------------------------------------------------------------------
# xi search
# ---------------------------------------------------------------------------

class _Deadline:
    def __init__(self, budget: Optional[float]):
        self.end = None if budget is None else time.monotonic() + budget
        self.ticks = 0

    def check(self):
        self.ticks += 1
        if self.end is not None and self.ticks % 256 == 0 and time.monotonic() > self.end:
            raise TimeoutError


def _signs(k):
    return [None] + [-1 if (k - 1 - r) % 2 else 1 for r in range(1, k)]


def _required(o, n):
    """What a row needs at offset o from its first band column:
    'band' (>= 1), or the exact border value."""
    if 0 <= o < n:
        return "band"
    if o == n or o == -1:
        return 1
    return 0


def _narrow(box, const, coef, need) -> bool:
    """Intersect box = [lo, hi] with {x : const + coef*x meets need}.
    Returns False once the box is empty."""
    lo, hi = box
    if coef == 0:
        if not (const >= 1 if need == "band" else const == need):
            lo, hi = 1, 0
    elif need == "band":
        t = 1 - const
        if coef > 0:
            lo = max(lo, -(-t // coef))
        else:
            hi = min(hi, t // coef)
    else:
        t = need - const
        if t % coef:
            lo, hi = 1, 0
        else:
            lo, hi = max(lo, t // coef), min(hi, t // coef)
    box[0], box[1] = lo, hi
    return lo <= hi


def _min_rotation(seq: tuple) -> tuple:
    return min(seq[s:] + seq[:s] for s in range(len(seq)))


def _rotations(seq: tuple) -> list:
    return sorted({seq[s:] + seq[:s] for s in range(len(seq))})


def _xi_search(k: int, n: int, bound: int, prefix: tuple = (), deadline=None) -> list:
    """Closing tuple sequences with entries in [0, bound] extending ``prefix``,
    one per rotation class: only sequences that are their own least
    rotation are kept, so every later tuple is at least the first one."""
    p = n + k + 1
    eps = -1 if k % 2 == 0 else 1
    sign = _signs(k)
    span = n + k               # tuples consumed by one row
    found = []
    deadline = deadline or _Deadline(None)

    def ok(v, need):
        return v >= 1 if need == "band" else v == need

    def step(J, tuples, fwd):
        deadline.check()
        if J > p:
            if tuple(tuples) != _min_rotation(tuple(tuples)):
                return
            try:
                f = reconstruct(XiSequence(k, n, tuple(tuples)))
            except NonClosing:
                return
            if all(x > 0 and x.denominator == 1 for r in f.rows for x in r):
                found.append(tuple(tuples))
            return
        # forward rows alive at this step: started at s <= J, not yet finished
        rows = [r for r in fwd if J - r[0] < span] + [(J, [0] * (k - 1) + [1])]
        choices = range(bound + 1)
        for head in itertools.product(choices, repeat=k - 2):
            if len(tuples) < len(prefix):
                if head != prefix[J - 1][:k - 2]:
                    continue
            if J > 1 and head < tuples[0][:k - 2]:
                continue
            box = [0, bound]
            base = []
            for s, vals in rows:
                const = eps * vals[-k]
                for r, c in enumerate(head, start=1):
                    const += sign[r] * c * vals[-k + r]
                coef = vals[-1]                     # sign of c_{k-1} is +1
                base.append((const, coef))
                if not _narrow(box, const, coef, _required(J - s, n)):
                    break
            lo, hi = box
            if lo > hi:
                continue
            for last in range(lo, hi + 1):
                tup = head + (last,)
                if len(tuples) < len(prefix) and tup != prefix[J - 1]:
                    continue
                if J > 1 and tup < tuples[0]:
                    continue
                new_tuples = tuples + [tup]
                if not _backward_ok(J, new_tuples):
                    continue
                nf = [(s, vals + [const + coef * last])
                      for (s, vals), (const, coef) in zip(rows, base)]
                step(J + 1, new_tuples, nf)

    def _backward_ok(J, tuples):
        # row whose last tuple is J, grown leftwards through tuples J, J-1, ...
        vals = [1] + [0] * (k - 1)               # offsets n .. n+k-1
        o = n - 1
        for j in range(J, max(0, J - span), -1):
            c = tuples[j - 1]
            acc = vals[k - 1]
            for r in range(1, k):
                acc -= sign[r] * c[r - 1] * vals[r - 1]
            v = eps * acc
            if not ok(v, _required(o, n)):
                return False
            vals = [v] + vals[:-1]
            o -= 1
        return True

    step(1, [], [])
    return found


def _xi_worker(args):
    k, n, bound, prefix = args
    return _xi_search(k, n, bound, prefix)


def xi_search(k: int, n: int, bound: int, budget: Optional[float] = None,
              workers: int = 1) -> list:
    """Period rows of every tame positive integral frieze reachable with xi
    entries <= bound.  Raises TimeoutError when ``budget`` seconds pass.

    The search visits one sequence per rotation class; the rotations are
    added back here (rotating the sequence shifts the frieze vertically).
    """
    if workers > 1:
        # split on the first tuple; the search is restarted per prefix
        heads = [(c,) for c in itertools.product(range(bound + 1), repeat=k - 1)]
        with ProcessPoolExecutor(workers) as ex:
            parts = ex.map(_xi_worker, [(k, n, bound, h) for h in heads])
            seqs = [s for part in parts for s in part]
    else:
        seqs = _xi_search(k, n, bound, deadline=_Deadline(budget))
    return [full_period_rows(reconstruct(XiSequence(k, n, r)))
            for s in seqs for r in _rotations(s)]


# ---------------------------------------------------------------------------
# row scan oracle
# ---------------------------------------------------------------------------

def row_scan(k: int, n: int, bound: int, budget: Optional[float] = None) -> list:
    """Scan rows 1..k-1 with band entries in [1, bound] and continue them.

    A candidate survives if every continuation is unique, integral and
    positive, the rows return to the scanned ones after n+k+1 steps, and
    the resulting periodic frieze is tame.
    """
    p = n + k + 1
    deadline = _Deadline(budget)
    out = []
    cells = itertools.product(range(1, bound + 1), repeat=n)
    for start in itertools.product(list(cells), repeat=k - 1):
        deadline.check()
        rows = [tuple(r) for r in start]
        good = True
        while len(rows) < p + k - 1:
            res = continue_row(rows[-(k - 1):], ExactRational(), k=k)
            if res.kind != UNIQUE:
                good = False
                break
            row = res.row
            if not all(x > 0 and x.denominator == 1 for x in row):
                good = False
                break
            rows.append(tuple(int(x) for x in row))
        if not good or tuple(rows[p:]) != tuple(rows[:k - 1]):
            continue
        f = periodic(k, n, rows[:p])
        if is_tame(f):
            out.append(tuple(rows[:p]))
    return out


ALGORITHMS = {"xi": xi_search, "scan": row_scan}


# ---------------------------------------------------------------------------
# bound sweep
# ---------------------------------------------------------------------------

def enumerate_tame_positive(k: int = 3, n: int = 1, convention: str = PATTERN_EQUALITY,
                            bound_schedule: Sequence[int] = DEFAULT_SCHEDULE,
                            budget: Optional[float] = None, algorithm: str = "xi",
                            workers: int = 1) -> EnumerationResult:
    """Run the search for increasing bounds until two consecutive counts agree.

    On running out of ``budget`` seconds, BudgetExhausted is raised with the
    partial result (``complete`` False) attached.
    """
    if n < 1 or k < 2:
        raise ValueError("need k >= 2 and n >= 1")
    if budget is not None and budget <= 0:
        raise ValueError("budget must be positive")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    search = ALGORITHMS[algorithm]
    t0 = time.monotonic()
    res = EnumerationResult(k, n, convention, algorithm)
    for bound in bound_schedule:
        left = None if budget is None else budget - (time.monotonic() - t0)
        try:
            if left is not None and left <= 0:
                raise TimeoutError
            if algorithm == "xi":
                found = search(k, n, bound, left, workers)
            else:
                found = search(k, n, bound, left)
        except TimeoutError:
            res.complete = False
            res.budget_spent = time.monotonic() - t0
            raise BudgetExhausted(
                f"budget of {budget}s exhausted at bound {bound}", partial=res)
        friezes = canonical_set(found, convention)
        res.bound_schedule.append(bound)
        res.count_per_bound.append(len(friezes))
        res.friezes = friezes
        if len(res.count_per_bound) >= 2 and res.count_per_bound[-1] == res.count_per_bound[-2]:
            res.stabilized = True
            break
    res.budget_spent = time.monotonic() - t0
    return res


def calibrate_convention(k: int = 3, n: int = 1, target: int = 5, **kw) -> dict:
    """Count under both conventions and report which one gives ``target``."""
    counts = {c: enumerate_tame_positive(k, n, c, **kw).count for c in CONVENTIONS}
    matching = [c for c, v in counts.items() if v == target]
    return {"counts": counts, "target": target, "matching": matching}
