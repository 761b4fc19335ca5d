import pytest
from hypothesis import given
from hypothesis import strategies as st

from slkfrieze.arith import ExactMatrix, det_exact
from slkfrieze.classify import verify_slk, is_tame
from slkfrieze.errors import ArityMismatch, NonClosing, WildInput
from slkfrieze.fixtures import (conway_coxeter, period9_example, nongeneric_example,
                                tame_example, wild_example)
from slkfrieze.frieze import same_array
from slkfrieze.wild import UNIQUE, continue_row
from slkfrieze.xi import XiSequence, extract_xi, reconstruct, transfer_matrix, xi_matrix

TAME = [tame_example, nongeneric_example, conway_coxeter, period9_example]


def test_xi_matrix_shapes():
    assert xi_matrix((4,), 2).row_lists() == [[0, -1], [1, 4]]
    assert xi_matrix((2, 5), 3).row_lists() == [[0, 0, 1], [1, 0, -2], [0, 1, 5]]
    perm = xi_matrix((0, 0), 3)
    assert perm.row_lists() == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    assert det_exact(perm) == 1
    with pytest.raises(ArityMismatch):
        xi_matrix((1, 2), 2)


@given(st.integers(2, 5).flatmap(
    lambda k: st.tuples(st.just(k), st.lists(st.integers(-9, 9), min_size=k - 1, max_size=k - 1))))
def test_xi_matrix_is_unimodular(data):
    k, t = data
    assert abs(det_exact(xi_matrix(t, k))) == 1


def test_tame_example_transfer_matrices():
    f = tame_example()
    for j in range(1, 9):
        mats = {transfer_matrix(f, i, j) for i in (1, 2, 3)}
        assert len(mats) == 1
    s = extract_xi(f)
    assert len(s.tuples) == 8
    assert s.product() == ExactMatrix.identity(3)


def test_conway_coxeter_xi():
    s = extract_xi(conway_coxeter())
    assert s.tuples == ((1,), (2,), (1,), (2,))
    assert s.product() == ExactMatrix.identity(2, -1)


def test_wild_input():
    with pytest.raises(WildInput):
        extract_xi(wild_example())


def test_non_closing():
    with pytest.raises(NonClosing):
        reconstruct(XiSequence(2, 1, ((5,), (5,), (5,), (5,))))


def test_sequence_length_is_checked():
    with pytest.raises(ArityMismatch):
        XiSequence(3, 1, ((1, 1),) * 4)


@pytest.mark.parametrize("build", TAME)
def test_round_trip_on_tame_fixtures(build):
    f = build()
    s = extract_xi(f)
    g = reconstruct(s)
    assert same_array(g, f)
    assert extract_xi(g) == s
    assert verify_slk(g).ok and is_tame(g)
    assert f.width % g.period == 0


def test_cc_from_tuples():
    assert same_array(reconstruct(XiSequence(2, 1, ((1,), (2,), (1,), (2,)))), conway_coxeter())


@pytest.mark.parametrize("build", TAME)
def test_transfer_matrices_agree_on_neighbouring_rows(build):
    f = build()
    for j in range(1, f.width + 1):
        assert transfer_matrix(f, 1, j) == transfer_matrix(f, 2, j)


def test_positive_tame_fixtures_have_nonnegative_xi():
    for build in (tame_example, conway_coxeter, period9_example):
        assert all(c >= 0 for t in extract_xi(build()).tuples for c in t)


@pytest.mark.parametrize("build", [tame_example, period9_example])
def test_continuation_agrees_with_reconstruction(build):
    f = build()
    g = reconstruct(extract_xi(f))
    for i in range(1, f.width + 1):
        res = continue_row([g.band(i), g.band(i + 1)])
        assert res.kind == UNIQUE
        assert res.row == g.band(i + 2)


@given(st.integers(0, 20))
def test_rotation_gives_shifted_frieze(shift):
    s = extract_xi(period9_example())
    g = reconstruct(s.rotated(shift))
    f = period9_example()
    assert all(g.band(i) == f.band(i + shift) for i in range(1, 10))
