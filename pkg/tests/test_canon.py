from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oaenum import (
    ArrayParams,
    Design,
    JShort,
    JStar,
    ShapeError,
    SignAssignment,
    UnsupportedDropError,
    build,
    build_catalog,
    canonicalize,
    isomorphic,
    jstars,
    short_j,
    solve_signs,
)
from oaenum.canon import jstar_form
from oaenum.oracle import orbit, orbit_min

from helpers import full_factorial, random_relabel


def oa12():
    return build(JStar((-4, -4, -4, -4, 4), 4), ArrayParams(2, 3))


def test_short_j_examples():
    assert short_j(oa12(), 2).entries == (-4, -4, -4, -4, 4)
    flipped = oa12().relabel(signs=[-1, 1, 1, 1])
    # t_1..t_3 contain column 1, t_4 = {2,3,4} does not, t_5 does.
    assert short_j(flipped, 2).entries == (4, 4, 4, -4, -4)
    assert canonicalize(short_j(flipped, 2)).entries == (-4, -4, -4, -4, 4)
    ff = Design(full_factorial(4, copies=3))
    assert short_j(ff, 2).entries == (0, 0, 0, 0, 0)


def test_short_j_shape_errors():
    with pytest.raises(ShapeError):
        short_j(oa12(), 3)
    low = Design.from_rows([[1, 1, 1, 1]] * 4)
    with pytest.raises(ShapeError):
        short_j(low, 2)


def test_sign_assignment_structure():
    for delta in product((-1, 1), repeat=4):
        sa = SignAssignment.from_delta(delta)
        assert np.prod(sa.induced) == 1
    for delta in product((-1, 1), repeat=5):
        sa = SignAssignment.from_delta(delta)
        assert np.prod(sa.induced[:5]) == 1


def test_solve_signs_examples():
    sa = solve_signs([-1, 1, -1, 1, None])
    assert sa.induced[:4] == (-1, 1, -1, 1) and sa.induced[4] == 1
    sa = solve_signs([1, 1, 1, 1, None])
    assert sa.delta == (1, 1, 1, 1) and sa.induced == (1, 1, 1, 1, 1)
    sa = solve_signs([-1, 1, 1, -1, None, -1])
    assert sa.induced[5] == -1 and (-1, 1, 1, -1) == sa.induced[:4]
    assert np.prod(sa.induced[:5]) == 1


def test_solve_signs_rejects_odd_full_slot():
    with pytest.raises(UnsupportedDropError):
        solve_signs([1, 1, 1, 1, 1, None])


@pytest.mark.parametrize("m", [4, 5, 6, 7])
def test_solve_signs_every_drop(m):
    for free in range(1, m + 2):
        if m % 2 and free == m + 1:
            continue
        for signs in product((-1, 1), repeat=m):
            targets = list(signs)
            targets.insert(free - 1, None)
            sa = solve_signs(targets, free)
            assert sa == SignAssignment.from_delta(sa.delta)
            assert all(sa.induced[j] == targets[j] for j in range(m + 1) if j != free - 1)


def test_canonicalize_examples():
    assert canonicalize(JShort((4, -4, 4, -4, 4), 4)).entries == (-4, -4, -4, -4, 4)
    assert canonicalize(JShort((-4, -4, -4, -4, 4), 4)).entries == (-4, -4, -4, -4, 4)
    x = tuple(8 * v for v in (-1, -1, -1, -1, 1, 0))
    assert canonicalize(JShort(x, 5)).entries == x


def test_isomorphic_examples(rng):
    a = oa12()
    assert isomorphic(a, a.relabel(row_perm=rng.permutation(12)), 2)
    assert isomorphic(a, random_relabel(a, rng), 2)
    params = ArrayParams(2, 10)
    u1 = build(JStar(tuple(8 * v for v in (-1, -1, -1, -1, -1)), 4), params)
    u2 = build(JStar(tuple(8 * v for v in (-1, -1, -1, -1, 1)), 4), params)
    assert not isomorphic(u1, u2, 2)
    with pytest.raises(ShapeError):
        isomorphic(a, u1, 2)


def jshort_vectors(max_m=7, bound=6):
    return st.integers(4, max_m).flatmap(
        lambda m: st.lists(st.integers(-bound, bound), min_size=m + 1, max_size=m + 1)
    )


@settings(max_examples=200, deadline=None)
@given(jshort_vectors())
def test_canonical_form_properties(entries):
    js = canonicalize(entries)
    m = len(entries) - 1
    assert canonicalize(js) == js
    form = jstar_form(js.entries)
    assert form == "17" if m % 2 else form in ("15", "16")
    assert sorted(map(abs, js.entries)) == sorted(map(abs, entries))


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 6).flatmap(
    lambda m: st.lists(st.integers(-3, 3), min_size=m + 1, max_size=m + 1)))
def test_canonicalize_constant_on_orbits(entries):
    # Holds for any integer vector, realizable or not: exhaustive over the orbit.
    target = canonicalize(entries)
    for image in orbit(tuple(entries)):
        assert canonicalize(image) == target


def test_even_forms_mutually_exclusive():
    for v in product(range(-2, 3), repeat=5):
        assert not ("15" == jstar_form(v) and _satisfies_16(v))


def _satisfies_16(v):
    m = len(v) - 1
    h = v[:m]
    return all(h[i] <= h[i + 1] for i in range(m - 2)) and h[m - 2] <= -abs(h[m - 1]) and v[m] < -abs(h[m - 1])


def test_tie_breaking_does_not_matter():
    # several slots share min |J|; every choice of the free slot gives the same J*
    entries = [-8, 4, -4, 4, -12]
    base = canonicalize(entries)
    m = 4
    low = min(abs(x) for x in entries[:m])
    for jp in [j + 1 for j in range(m) if abs(entries[j]) == low]:
        targets = [None if j == jp else (-1 if x > 0 else 1) for j, x in enumerate(entries, 1)]
        sa = solve_signs(targets, jp)
        flipped = [s * x for s, x in zip(sa.induced, entries)]
        rest = sorted(x for j, x in enumerate(flipped[:m], 1) if j != jp)
        assert tuple(rest + [flipped[jp - 1], flipped[m]]) == base.entries


def test_zero_sign_choice_does_not_matter():
    # J_{t_1} = 0 in case (i): flipping it instead of leaving it gives the same J*
    entries = [0, -4, 4, -8, 0]
    base = canonicalize(entries)
    alt_targets = [-1, 1, -1, 1, None]
    sa = solve_signs(alt_targets, 5)
    flipped = [s * x for s, x in zip(sa.induced, entries)]
    assert tuple(sorted(flipped[:4]) + [flipped[4]]) == base.entries


@pytest.mark.parametrize("d,lam", [(2, 3), (2, 6), (3, 4), (3, 5), (4, 2)])
def test_catalog_orbit_invariance(d, lam, rng):
    for design, js in zip(build_catalog(d, lam), jstars(d, lam)):
        for _ in range(50):
            assert canonicalize(short_j(random_relabel(design, rng), d)) == js


@pytest.mark.parametrize("d,lam", [(2, 5), (2, 6), (3, 4)])
def test_agrees_with_orbit_minimum(d, lam):
    reps = jstars(d, lam)
    mins = [orbit_min(js) for js in reps]
    assert len(set(mins)) == len(reps)
    for js, mn in zip(reps, mins):
        assert canonicalize(mn) == js
