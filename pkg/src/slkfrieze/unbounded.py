"""The unbounded SL_3 frieze over Q(sqrt 80).

A 12-row segment template (k=3, n=8) has slots that are either constants
or one of 76 closed forms in l,

    a(l) = alpha * w**(-m*l) + c + conj-like(alpha) * w**(m*l),  w = 9 + sqrt 80,

with m in {1, 2}.  Stacking segments l = ..., -1, 0, 1, ... (segment l
supplies rows 12*l+1 .. 12*l+12) gives an integral positive frieze whose
entries grow without bound.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from . import printed
from .arith import W, QuadNumber, qf_as_integer, qf_pow
from .classify import verify_slk
from .errors import NonIntegralValue
from .fixtures import printed_segment, tokenize
from .frieze import FriezePattern, parse_printed, window_pattern

SEGMENT_ROWS = 12
K, N = 3, 8

# Closed forms as printed ("l" is the segment index).  Two of them print a
# doubled "+" where the constant term belongs; see derive_missing_constants.
FORMULA_SOURCE = (
    "1/40(13w+63)w^-l+1/40(-13w+297)w^l",  # 1
    "1/40(113w+3)w^-2l+9+1/40(-113w+2037)w^2l",  # 2
    "1/10(77w+1)w^-2l+106/5+1/10(-77w+1387)w^2l",  # 3
    "1/8(11w+17)w^-l+1/8(-11w+215)w^l",  # 4
    "1/40(73w+27)w^-2l+54/5+1/40(-73w+1341)w^2l",  # 5
    "1/40(31w+5)w^-2l+19/5+1/40(-31w+563)w^2l",  # 6
    "1/20(21w+11)w^-l+1/20(-21w+389)w^l",  # 7
    "1/20(3w+13)w^-l+1/20(-3w+67)w^l",  # 8
    "1/40(51w+1)w^-2l+4+1/40(-51w+919)w^2l",  # 9
    "1/40(139w+1)w^-2l+47/5+1/40(-139w+2503)w^2l",  # 10
    "1/8(5w+7)w^-l+1/8(-5w+97)w^l",  # 11
    "1/40(33w+11)w^-2l+23/5+1/40(-33w+605)w^2l",  # 12
    "1/20(7w+1)w^-2l+8/5+1/20(-7w+127)w^2l",  # 13
    "1/40(19w+9)w^-l+1/40(-19w+351)w^l",  # 14
    "1/8(3w+1)w^-l+1/8(-3w+55)w^l",  # 15
    "1/40(41w+11)w^-l+1/40(-41w+749)w^l",  # 16
    "1/4(w+7)w^-l+1/4(-w+25)w^l",  # 17
    "1/8(w+3)w^-l+1/8(-w+21)w^l",  # 18
    "1/20(-w+49)w^-l+1/20(w+31)w^l",  # 19
    "1/40(-3w+167)w^-l+1/40(3w+113)w^l",  # 20
    "1/40(-w+109)w^-l+1/40(w+91)w^l",  # 21
    "1/10(5w+13)w^-2l+47/5+1/10(-5w+103)w^2l",  # 22
    "1/40(9w+11)w^-2l+12/5+1/40(-9w+173)w^2l",  # 23
    "1/4(w+15)w^-l+1/4(-w+33)w^l",  # 24
    "1/40(15w+101)w^-2l+66/5+1/40(-15w+371)w^2l",  # 25
    "1/10(7w+43)w^-2l+119/5+1/10(-7w+169)w^2l",  # 26
    "1/40(11w+41)w^-l+1/40(-11w+239)w^l",  # 27
    "w^-l+w^l",  # 28
    "1/40(9w+19)w^-2l+4+1/40(-9w+181)w^2l",  # 29
    "1/10(w+1)w^-2l++1/10(-w+19)w^2l",  # 30
    "1/8(w+11)w^-l+1/8(-w+29)w^l",  # 31
    "1/40(7w+37)w^-2l+5+1/40(-7w+163)w^2l",  # 32
    "1/40(13w+63)w^-2l+9+1/40(-13w+297)w^2l",  # 33
    "1/40(-9w+181)w^-l+1/40(9w+19)w^l",  # 34
    "1/20(-7w+143)w^-l+1/20(7w+17)w^l",  # 35
    "1/40(9w+19)w^-l+1/40(-9w+181)w^l",  # 36
    "1/10(w+1)w^-l+1/10(-w+19)w^l",  # 37
    "1/8(w+27)w^-l+1/8(-w+45)w^l",  # 38
    "1/4(w+23)w^-l+1/4(-w+41)w^l",  # 39
    "1/10(-5w+103)w^-2l+47/5+1/10(5w+13)w^2l",  # 40
    "1/40(-31w+651)w^-2l+82/5+1/40(31w+93)w^2l",  # 41
    "1/40(w+91)w^-l+1/40(-w+109)w^l",  # 42
    "1/40(-11w+239)w^-l+1/40(11w+41)w^l",  # 43
    "1/40(-3w+223)w^-2l+51/5+1/40(3w+169)w^2l",  # 44
    "1/10(-w+95)w^-2l+89/5+1/10(w+77)w^2l",  # 45
    "1/4(-w+33)w^-l+1/4(w+15)w^l",  # 46
    "1/40(-11w+231)w^-2l+27/5+1/40(11w+33)w^2l",  # 47
    "1/40(-17w+365)w^-2l+47/5+1/40(17w+59)w^2l",  # 48
    "1/40(w+51)w^-l+1/40(-w+69)w^l",  # 49
    "1/20(-3w+67)w^-l+1/20(3w+13)w^l",  # 50
    "1/40(-w+125)w^-2l+31/5+1/40(w+107)w^2l",  # 51
    "1/40(-w+213)w^-2l+54/5+1/40(w+195)w^2l",  # 52
    "1/8(-w+37)w^-l+1/8(w+19)w^l",  # 53
    "1/4(-w+25)w^-l+1/4(w+7)w^l",  # 54
    "1/8(-3w+79)w^-l+1/8(3w+25)w^l",  # 55
    "1/8(-3w+55)w^-l+1/8(3w+1)w^l",  # 56
    "1/20(-17w+313)w^-l+1/20(17w+7)w^l",  # 57
    "1/40(7w+37)w^-l+1/40(-7w+163)w^l",  # 58
    "1/40(-7w+131)w^-2l+8/5+1/40(7w+5)w^2l",  # 59
    "1/40(-11w+207)w^-2l+13/5+1/40(11w+9)w^2l",  # 60
    "1/8(-w+21)w^-l+1/8(w+3)w^l",  # 61
    "1/40(-11w+199)w^-2l++1/40(11w+1)w^2l",  # 62
    "1/40(-25w+453)w^-2l+13/5+1/40(25w+3)w^2l",  # 63
    "1/40(-w+29)w^-l+1/40(w+11)w^l",  # 64
    "1/10(-w+19)w^-l+1/10(w+1)w^l",  # 65
    "1/40(-23w+443)w^-2l+41/5+1/40(23w+29)w^2l",  # 66
    "1/10(-9w+175)w^-2l+66/5+1/10(9w+13)w^2l",  # 67
    "1/8(-3w+71)w^-l+1/8(3w+17)w^l",  # 68
    "1/40(-37w+673)w^-2l+4+1/40(37w+7)w^2l",  # 69
    "1/10(-21w+383)w^-2l+51/5+1/10(21w+5)w^2l",  # 70
    "1/40(-13w+257)w^-l+1/40(13w+23)w^l",  # 71
    "1/40(-w+69)w^-l+1/40(w+51)w^l",  # 72
    "1/2(-w+19)w^-l+1/2(w+1)w^l",  # 73
    "1/8(-9w+173)w^-l+1/8(9w+11)w^l",  # 74
    "1/40(-51w+919)w^-l+1/40(51w+1)w^l",  # 75
    "1/40(-11w+199)w^-l+1/40(11w+1)w^l",  # 76
)

# Output of derive_missing_constants(), frozen.
REPAIRED_CONSTANTS = {30: Fraction(1), 62: Fraction(1)}


@dataclass(frozen=True)
class ClosedForm:
    terms: tuple          # ((QuadNumber coefficient, exponent multiplier), ...)
    constant: Optional[Fraction]

    def radical_part(self, l: int) -> QuadNumber:
        total = QuadNumber(0)
        for coeff, mult in self.terms:
            total = total + coeff * qf_pow(W, mult * l)
        return total

    def evaluate(self, l: int) -> QuadNumber:
        if self.constant is None:
            raise ValueError("closed form has an undetermined constant term")
        return self.radical_part(l) + self.constant


_TERM = re.compile(r"^(?:(\d+)/(\d+))?(?:\((-?\d*)w([+-]\d+)\))?w\^(-?\d*)l$")


def _split_top(text: str) -> list[str]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def parse_closed_form(text: str) -> ClosedForm:
    terms = []
    constant = Fraction(0)
    missing = False
    for part in _split_top(text):
        if part == "":
            missing = True
            continue
        m = _TERM.match(part)
        if m is None:
            constant += Fraction(part)
            continue
        num, den, a, b, mult = m.groups()
        scale = Fraction(int(num or 1), int(den or 1))
        if a is None:
            lin, const = 0, 1
        else:
            lin = int(a) if a not in ("", "-") else (-1 if a == "-" else 1)
            const = int(b)
        mult = int(mult) if mult not in ("", "-") else (-1 if mult == "-" else 1)
        # (lin*w + const) * scale, with w = 9 + sqrt 80
        coeff = QuadNumber((9 * lin + const) * scale, lin * scale)
        terms.append((coeff, mult))
    return ClosedForm(tuple(terms), None if missing else constant)


@lru_cache(maxsize=None)
def raw_table() -> tuple:
    """The closed forms as printed, undetermined constants left as None."""
    return tuple(parse_closed_form(t) for t in FORMULA_SOURCE)


@lru_cache(maxsize=None)
def formula_table() -> tuple:
    table = list(raw_table())
    for idx, c in REPAIRED_CONSTANTS.items():
        f = table[idx - 1]
        if f.constant is not None:
            raise AssertionError(f"a_{idx} already has a constant term")
        table[idx - 1] = ClosedForm(f.terms, c)
    if any(f.constant is None for f in table):
        raise AssertionError("undetermined constant left in the formula table")
    return tuple(table)


# ---------------------------------------------------------------------------
# template
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def template() -> tuple:
    """Band rows of the segment template: each slot is an int (a constant
    printed in the template) or a formula index 1..76 wrapped as ("a", idx)."""
    cells = tokenize(printed.SEGMENT_TEMPLATE)
    rows, _ = parse_printed(K, N, cells)
    out = []
    for r in rows:
        out.append(tuple(("a", int(x[1:])) if isinstance(x, str) else x for x in r))
    return tuple(out)


def formula_slots() -> dict:
    """formula index -> list of (row, band position) where it appears."""
    where = {}
    for r, row in enumerate(template(), start=1):
        for s, slot in enumerate(row, start=1):
            if isinstance(slot, tuple):
                where.setdefault(slot[1], []).append((r, s))
    return where


def derive_missing_constants() -> dict:
    """Solve for each undetermined constant from the printed segment 0 and
    confirm it against the printed segment 1.

    Returns {index: (constant, value at l=1 predicted, value printed)}.
    """
    raw = raw_table()
    q0 = printed_segment(0).rows
    q1 = printed_segment(1).rows
    where = formula_slots()
    out = {}
    for idx, f in enumerate(raw, start=1):
        if f.constant is not None:
            continue
        r, s = where[idx][0]
        rad0 = f.radical_part(0)
        if not rad0.is_rational():
            raise NonIntegralValue(f"radical part of a_{idx}(0) is irrational", rad0)
        c = q0[r - 1][s - 1] - rad0.a
        predicted = f.radical_part(1) + c
        out[idx] = (c, predicted, q1[r - 1][s - 1])
    return out


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def entry_value(index: int, l: int) -> QuadNumber:
    if not 1 <= index <= len(FORMULA_SOURCE):
        raise IndexError(f"formula index {index} out of range 1..{len(FORMULA_SOURCE)}")
    return formula_table()[index - 1].evaluate(l)


def entry_formula(index: int, l: int) -> int:
    """a_index(l) as an exact integer."""
    v = entry_value(index, l)
    out = qf_as_integer(v)
    if out is None:
        raise NonIntegralValue(f"a_{index}({l}) = {v} is not an integer", v)
    return out


def segment(l: int) -> tuple:
    rows = []
    for row in template():
        rows.append(tuple(entry_formula(slot[1], l) if isinstance(slot, tuple) else slot
                          for slot in row))
    return tuple(rows)


def stacked(lo: int, hi: int) -> FriezePattern:
    if lo > hi:
        raise ValueError("empty segment range")
    rows = [r for l in range(lo, hi + 1) for r in segment(l)]
    return window_pattern(K, N, rows, SEGMENT_ROWS * lo + 1,
                          name=f"unbounded[{lo}..{hi}]")


def t_sequence(lo: int, hi: int) -> dict:
    """t_l by the recurrence t_l = 18 t_{l-1} - t_{l-2}, t_0 = 2, t_1 = 18,
    run in both directions."""
    t = {0: 2, 1: 18}
    for l in range(2, hi + 1):
        t[l] = 18 * t[l - 1] - t[l - 2]
    for l in range(-1, lo - 1, -1):
        t[l] = 18 * t[l + 1] - t[l + 2]
    return {l: t[l] for l in range(lo, hi + 1)}


@dataclass
class ConcatenationReport:
    lo: int
    hi: int
    slk_ok: bool
    integral: bool
    positive: bool
    windows_checked: int
    max_entry: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.slk_ok and self.integral and self.positive

    def as_dict(self) -> dict:
        return {"range": [self.lo, self.hi], "ok": self.ok, "slk": self.slk_ok,
                "integral": self.integral, "positive": self.positive,
                "windows_checked": self.windows_checked,
                "max_entry": {str(l): str(v) for l, v in sorted(self.max_entry.items())},
                "failures": [w.as_dict() for w in self.failures]}


def verify_concatenation(lo: int, hi: int) -> ConcatenationReport:
    f = stacked(lo, hi)
    rep = verify_slk(f)
    entries = [x for r in f.rows for x in r]
    max_entry = {l: max(max(r) for r in segment(l)) for l in range(lo, hi + 1)}
    return ConcatenationReport(
        lo, hi, rep.ok,
        integral=all(x.denominator == 1 for x in entries),
        positive=all(x > 0 for x in entries),
        windows_checked=rep.windows_checked, max_entry=max_entry,
        failures=rep.failures)
