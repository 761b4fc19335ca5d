import math
import re
from fractions import Fraction

import pytest

from slkfrieze import unbounded as ub
from slkfrieze.arith import QuadNumber
from slkfrieze.classify import verify_slk
from slkfrieze.errors import NonIntegralValue
from slkfrieze.fixtures import printed_segment


def float_eval(text, l, constant=None):
    """Evaluate a printed closed form with floating point, independently of
    the exact parser."""
    if "++" in text:
        text = text.replace("++", f"+{constant}+")
    expr = text.replace("^", "**")
    expr = re.sub(r"(\d)\(", r"\1*(", expr)
    expr = re.sub(r"(\d)w", r"\1*w", expr)
    expr = expr.replace(")w", ")*w")
    expr = re.sub(r"\*\*(-?)(\d*)l", lambda m: f"**({m.group(1)}{m.group(2) or 1}*l)", expr)
    return eval(expr, {"w": 9 + math.sqrt(80), "l": l})


def test_examples():
    assert ub.entry_formula(1, 0) == 9
    assert ub.entry_formula(28, 1) == 18
    assert ub.entry_formula(28, 2) == 322
    w = QuadNumber(9, 1)
    assert ub.entry_value(28, 2) == w ** 2 + w ** -2


def test_index_range():
    with pytest.raises(IndexError):
        ub.entry_formula(0, 0)
    with pytest.raises(IndexError):
        ub.entry_formula(77, 0)


def test_parser_against_float_evaluation():
    for idx, text in enumerate(ub.FORMULA_SOURCE, start=1):
        c = ub.REPAIRED_CONSTANTS.get(idx)
        for l in range(-3, 4):
            exact = ub.entry_formula(idx, l)
            approx = float_eval(text, l, c)
            assert math.isclose(exact, approx, rel_tol=1e-9, abs_tol=1e-6), (idx, l)


def test_missing_constants_derived_then_checked():
    raw = ub.raw_table()
    assert [i for i, f in enumerate(raw, start=1) if f.constant is None] == [30, 62]
    derived = ub.derive_missing_constants()
    assert set(derived) == {30, 62}
    for idx, (c, predicted, printed) in derived.items():
        assert c == 1 == ub.REPAIRED_CONSTANTS[idx]
        assert predicted == QuadNumber(printed)
    assert ub.entry_formula(30, 0) == 3 and ub.entry_formula(30, 1) == 35
    assert ub.entry_formula(62, 0) == 6 and ub.entry_formula(62, 1) == 1598


def test_template_shape():
    t = ub.template()
    assert len(t) == 12 and all(len(r) == 8 for r in t)
    slots = {s[1] for r in t for s in r if isinstance(s, tuple)}
    assert slots == set(range(1, 77))
    fixed = sorted({s for r in t for s in r if not isinstance(s, tuple)})
    assert fixed and all(isinstance(x, int) for x in fixed)


def test_segments_match_printed():
    for which in (0, 1):
        seg = ub.segment(which)
        printed = printed_segment(which).rows
        assert sum(len(r) for r in seg) == 96
        assert seg == printed


def test_values_integral_positive_and_conjugate_fixed():
    for l in range(-10, 11):
        for idx in range(1, 77):
            v = ub.entry_value(idx, l)
            assert v.b == 0
            assert v.a.denominator == 1 and v.a > 0


def test_t_recurrence():
    t = ub.t_sequence(-10, 10)
    for l in range(-10, 11):
        assert ub.entry_formula(28, l) == t[l]
    for l in range(-8, 11):
        assert t[l] == 18 * t[l - 1] - t[l - 2]


def test_growth_away_from_zero():
    top = {l: max(max(r) for r in ub.segment(l)) for l in range(-5, 6)}
    for l in range(0, 5):
        assert top[l + 1] > top[l]
    for l in range(0, -5, -1):
        assert top[l - 1] > top[l]


@pytest.mark.parametrize("lo,hi", [(0, 0), (0, 1), (-3, 3)])
def test_concatenation(lo, hi):
    rep = ub.verify_concatenation(lo, hi)
    assert rep.ok, rep.failures[:3]
    f = ub.stacked(lo, hi)
    assert f.first_index == 12 * lo + 1 and f.period is None


def test_seam_windows():
    f = ub.stacked(0, 1)
    rep = verify_slk(f, rows=[10, 11, 12])
    assert rep.ok and rep.windows_checked > 0


def test_non_integral_value_surfaces(monkeypatch):
    bad = list(ub.formula_table())
    f = bad[0]
    bad[0] = ub.ClosedForm(f.terms, f.constant + Fraction(1, 2))
    monkeypatch.setattr(ub, "formula_table", lambda: tuple(bad))
    with pytest.raises(NonIntegralValue) as info:
        ub.entry_formula(1, 0)
    assert isinstance(info.value.value, QuadNumber)


def test_parse_closed_form():
    f = ub.parse_closed_form("w^-l+w^l")
    assert f.evaluate(1) == QuadNumber(18)
    g = ub.parse_closed_form("1/10(w+1)w^-2l++1/10(-w+19)w^2l")
    assert g.constant is None
    with pytest.raises(ValueError):
        g.evaluate(0)
