from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oaenum import ArrayParams, IntervalSet, SolutionTuple, count, jstars, solutions, solutions_d_plus_1
from oaenum.canon import jstar_form
from oaenum.construct import build, n_from_jshort
from oaenum.enumeration import to_jstar


def tuples(d, lam):
    return {s.u + (s.k,) for s in solutions(d, lam)}


def test_interval_set():
    assert list(IntervalSet(Fraction(-7, 5), Fraction(5, 3), "O")) == [-1, 1]
    assert list(IntervalSet(Fraction(-3, 2), 2, "E")) == [0, 2]
    assert list(IntervalSet(Fraction(1, 3), Fraction(2, 3))) == []
    assert len(IntervalSet(3, 1)) == 0
    assert 3 in IntervalSet(-3, 3, "O") and 2 not in IntervalSet(-3, 3, "O")
    with pytest.raises(ValueError):
        IntervalSet(0, 1, "X")


def test_small_examples():
    assert tuples(2, 3) == {(-1, -1, -1, -1, 1, 0)}
    assert tuples(2, 5) == {(-1, -1, -1, -1, -1, 0), (-3, -1, -1, -1, 1, 0), (-1, -1, -1, 1, -3, 0)}
    assert tuples(3, 5) == {(-3, -1, -1, -1, 1, 0, 0), (-1, -1, -1, -1, -1, 0, 0), (-1, -1, -1, -1, 1, -2, 0)}
    assert tuples(4, 3) == set()


def test_example_two_lambda_star_three():
    expected = {
        (-1, 0, 0, 0, 0, 1), (0, 0, 0, 0, -1, 1), (-1, -1, -1, 0, 0, 0), (-1, -1, 0, 0, -1, 0),
        (-2, -1, 0, 0, 0, 0), (-2, 0, 0, 0, -1, 0), (-1, 0, 0, 0, -2, 0), (-3, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, -3, 0), (-1, -1, -1, -1, 1, 0),
    }
    assert tuples(2, 6) == expected


def test_deterministic_order():
    # all of S1 before S2; k ascending within each set
    got = [s.u + (s.k,) for s in solutions(2, 7)]
    assert got == [
        (-3, -1, -1, -1, -1, 0), (-3, -3, -1, -1, 1, 0), (-5, -1, -1, -1, 1, 0), (-1, -1, -1, -1, 1, 1),
        (-1, -1, -1, -1, -3, 0), (-1, -1, -1, 1, -5, 0), (-3, -1, -1, 1, -3, 0),
    ]
    assert solutions(3, 9) == solutions(3, 9)


def test_jstar_scaling():
    assert jstars(2, 3)[0].entries == (-4, -4, -4, -4, 4)
    assert to_jstar(SolutionTuple((-1, 0, 0, 0, 0), 0), 2, 2).entries == (-8, 0, 0, 0, 0)
    assert jstars(3, 3)[0].entries == (-8, -8, -8, -8, 8, 0)


def test_count_examples():
    assert count(2, 51) == 10097
    assert count(2, 50) == 9682
    assert count(3, 51) == 15573
    assert count(4, 39) == 3684
    assert count(3, 50) == 14975


def test_d_plus_1():
    assert solutions_d_plus_1(2, 3) == [(-3, 0), (-1, 1)]
    assert solutions_d_plus_1(3, 1) == [(-1, 0)]
    assert solutions_d_plus_1(2, 4) == [(-4, 0), (-2, 1), (0, 2)]


params = st.tuples(st.integers(2, 7), st.integers(1, 16))


@settings(max_examples=60, deadline=None)
@given(params)
def test_every_tuple_is_a_valid_solution(dl):
    d, lam = dl
    m = d + 2
    sols = solutions(d, lam)
    assert len(sols) == count(d, lam) == len(set(sols))
    js = jstars(d, lam)
    assert len(set(js)) == len(js)
    for s, x in zip(sols, js):
        assert len(s.u) == m + 1
        assert jstar_form(x.entries) == x.form
        # N_phi equals k, and no run is rarer than the empty one
        nv = n_from_jshort(x, ArrayParams(d, lam))
        assert nv[0] == s.k == min(nv.counts)


@pytest.mark.parametrize("d", [2, 4, 6, 8])
def test_even_d_odd_lambda_checkpoints(d):
    assert all(count(d, lam) == 0 for lam in range(1, d, 2))
    assert [count(d, d + 1), count(d, d + 3), count(d, d + 5)] == [1, 3, 7]


@pytest.mark.parametrize("d", [3, 5, 7])
def test_odd_d_odd_lambda_checkpoints(d):
    assert all(count(d, lam) == 0 for lam in range(1, d - 1, 2))
    assert [count(d, d), count(d, d + 2), count(d, d + 4)] == [1, 3, 7]


@pytest.mark.parametrize("d,expected", [(2, [2, 5, 10]), (3, [2, 5, 10]), (4, [2, 5, 9]), (5, [2, 5, 9]),
                                         (6, [2, 5, 9]), (7, [2, 5, 9]), (8, [2, 5, 9])])
def test_even_lambda_checkpoints(d, expected):
    assert [count(d, 2), count(d, 4), count(d, 6)] == expected


def test_even_lambda_always_nonempty():
    assert all(count(d, lam) >= 1 for d in range(2, 7) for lam in range(2, 21, 2))
