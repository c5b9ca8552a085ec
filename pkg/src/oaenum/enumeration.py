"""Closed-form generation of every nonisomorphic OA(lambda 2^d, d+2, 2, d).

Each parity class of (d, lambda) reduces to a linear equation in integers
``u_1, ..., u_{m+1}, k`` with ordering side conditions.  The solution sets
are emitted as nested loops over integer intervals with rational endpoints:

* even d, odd lambda:  ``lambda + sum(u) = 4k``, u odd; sets S1 (ordering A)
  and S2 (ordering B).
* even d, even lambda: ``lambda* + sum(u) = 2k``; sets S3 (A) and S4 (B).
* odd d, odd lambda:   ``lambda + sum(u) = 4k``, u_1..u_m odd, u_{m+1} even.
* odd d, even lambda:  ``lambda* + sum(u) = 2k``.

Ordering A is ``u_1 <= ... <= u_m <= -|u_{m+1}|``; ordering B is
``u_1 <= ... <= u_{m-1} <= -|u_m|`` with ``u_{m+1} <= -|u_m| - gap``
(gap 2 in the odd-u case, 1 otherwise).  The odd-d classes use
``u_1 <= ... <= u_{m-1} <= -|u_m|, u_{m+1} <= 0``.

Emission order: all of S1 before S2 (S3 before S4); within a set, k
ascending, then the variables in the order they are bound (u_{m+1} or u_m
first, down to u_2), each ascending.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Iterator

from .canon import JStar
from .subsets import ArrayParams

ANY, ODD, EVEN = "Z", "O", "E"

# Debug-mode invariant checks on every emitted tuple; flip off for raw speed.
CHECK_TUPLES = __debug__


@dataclass(frozen=True)
class IntervalSet:
    """Integers of a given parity in the closed interval [lower, upper]."""

    lower: Fraction
    upper: Fraction
    parity: str = ANY

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if self.parity not in (ANY, ODD, EVEN):
            raise ValueError(f"unknown parity {self.parity!r}")

    def bounds(self) -> tuple[int, int]:
        return ceil(self.lower), floor(self.upper)

    def __iter__(self) -> Iterator[int]:
        return iter(_members(*self.bounds(), self.parity))

    def __contains__(self, x: int) -> bool:
        lo, hi = self.bounds()
        return lo <= x <= hi and _parity_ok(x, self.parity)

    def __len__(self) -> int:
        return len(_members(*self.bounds(), self.parity))


def _parity_ok(x: int, parity: str) -> bool:
    return parity == ANY or (x % 2 == 1) == (parity == ODD)


def _members(lo: int, hi: int, parity: str) -> range:
    if parity == ANY:
        return range(lo, hi + 1)
    want = 1 if parity == ODD else 0
    if lo % 2 != want:
        lo += 1
    return range(lo, hi + 1, 2)


def _fdiv(num: int, den: int) -> int:
    """floor(num / den) for den > 0."""
    return num // den


def _cdiv(num: int, den: int) -> int:
    """ceil(num / den) for den > 0."""
    return -((-num) // den)


@dataclass(frozen=True)
class SolutionTuple:
    u: tuple[int, ...]
    k: int

    def __str__(self):
        return " ".join(str(x) for x in self.u + (self.k,))


def _descend(base: int, top: int, j_start: int, tail: list[int], parity: str, out: list) -> None:
    """Bind u_j for j = j_start..2, then close with u_1.

    ``base`` is ``lambda - 4k`` (or ``lambda* - 2k``) plus every u already bound;
    ``top`` is the upper bound for u_{j_start}; ``tail`` lists the bound
    variables from u_{j_start+1} up to u_{m+1}.
    """
    if j_start == 1:
        out.append((-base,) + tuple(tail))
        return
    j = j_start
    for uj in _members(_cdiv(-base, j), top, parity):
        tail.insert(0, uj)
        _descend(base + uj, uj, j - 1, tail, parity, out)
        del tail[0]


def _even_d_odd_lambda(m: int, lam: int):
    """S1 (k ascending) then S2 (k ascending)."""
    d = m - 2
    for k in range(0, _fdiv(lam - d - 1, 4) + 1):
        r = lam - 4 * k
        for u_last in _members(_cdiv(-r, m + 1), _fdiv(r, m - 1), ODD):
            for um in _members(_cdiv(-(r + u_last), m), -abs(u_last), ODD):
                out: list = []
                _descend(r + u_last + um, um, m - 1, [um, u_last], ODD, out)
                for u in out:
                    yield u, k, "S1"
    for k in range(0, _fdiv(lam - d - 3, 4) + 1):
        r = lam - 4 * k
        for um in _members(_cdiv(-(r - 2), m + 1), _fdiv(r - 2, m - 1), ODD):
            for u_last in _members((m - 1) * abs(um) - um - r, -abs(um) - 2, ODD):
                base = r + um + u_last
                for um1 in _members(_cdiv(-base, m - 1), -abs(um), ODD):
                    out = []
                    _descend(base + um1, um1, m - 2, [um1, um, u_last], ODD, out)
                    for u in out:
                        yield u, k, "S2"


def _even_d_even_lambda(m: int, lam_star: int):
    """S3 (k ascending) then S4 (k ascending)."""
    for k in range(0, _fdiv(lam_star, 2) + 1):
        r = lam_star - 2 * k
        for u_last in _members(_cdiv(-r, m + 1), _fdiv(r, m - 1), ANY):
            for um in _members(_cdiv(-(r + u_last), m), -abs(u_last), ANY):
                out: list = []
                _descend(r + u_last + um, um, m - 1, [um, u_last], ANY, out)
                for u in out:
                    yield u, k, "S3"
    for k in range(0, _fdiv(lam_star - 1, 2) + 1):
        r = lam_star - 2 * k
        for um in _members(_cdiv(-(r - 1), m + 1), _fdiv(r - 1, m - 1), ANY):
            for u_last in _members((m - 1) * abs(um) - um - r, -abs(um) - 1, ANY):
                base = r + um + u_last
                for um1 in _members(_cdiv(-base, m - 1), -abs(um), ANY):
                    out = []
                    _descend(base + um1, um1, m - 2, [um1, um, u_last], ANY, out)
                    for u in out:
                        yield u, k, "S4"


def _odd_d(m: int, r0: int, step: int, kmax: int, last_lower, u_parity: str, last_parity: str, tag: str):
    """Shared loop for both odd-d classes (u_{m+1} bound first, then u_m, u_{m-1}, ...)."""
    for k in range(0, kmax + 1):
        r = r0 - step * k
        for u_last in _members(last_lower(r), 0, last_parity):
            b = r + u_last
            for um in _members(_cdiv(-b, m), _fdiv(b, m - 2), u_parity):
                base = b + um
                for um1 in _members(_cdiv(-base, m - 1), -abs(um), u_parity):
                    out: list = []
                    _descend(base + um1, um1, m - 2, [um1, um, u_last], u_parity, out)
                    for u in out:
                        yield u, k, tag


def _raw(d: int, lam: int):
    p = ArrayParams(d, lam)
    m = p.m
    if d % 2 == 0 and lam % 2 == 1:
        return _even_d_odd_lambda(m, lam)
    if d % 2 == 0:
        return _even_d_even_lambda(m, lam // 2)
    if lam % 2 == 1:
        # u_{m+1} in E[-(lambda - d - 4k), 0]
        return _odd_d(m, lam, 4, _fdiv(lam - d, 4), lambda r: -(r - d), ODD, EVEN, "S5")
    return _odd_d(m, lam // 2, 2, lam // 4, lambda r: -r, ANY, ANY, "S6")


def _check(u: tuple[int, ...], k: int, d: int, lam: int, tag: str) -> None:
    m = d + 2
    head, last = u[:m], u[m]
    ordered = lambda xs: all(xs[i] <= xs[i + 1] for i in range(len(xs) - 1))
    form_a = ordered(head) and head[-1] <= -abs(last)
    if lam % 2 == 1:
        assert lam + sum(u) == 4 * k, (u, k)
        if d % 2 == 0:
            assert all(x % 2 == 1 and abs(x) <= lam - 2 for x in u), (u, k)
            form_b = ordered(head[:-1]) and head[-2] <= -abs(head[-1]) and last <= -abs(head[-1]) - 2
            assert form_a != form_b and form_a == (tag == "S1"), (u, k)
        else:
            assert all(x % 2 == 1 and abs(x) <= lam - 2 for x in head), (u, k)
            assert last % 2 == 0 and abs(last) <= lam - 1, (u, k)
            assert ordered(head[:-1]) and head[-2] <= -abs(head[-1]) and last <= 0, (u, k)
    else:
        ls = lam // 2
        assert ls + sum(u) == 2 * k, (u, k)
        assert all(abs(x) <= ls for x in u), (u, k)
        if d % 2 == 0:
            form_b = ordered(head[:-1]) and head[-2] <= -abs(head[-1]) and last <= -abs(head[-1]) - 1
            assert form_a != form_b and form_a == (tag == "S3"), (u, k)
        else:
            assert ordered(head[:-1]) and head[-2] <= -abs(head[-1]) and last <= 0, (u, k)
    assert k >= 0


def solutions(d: int, lam: int) -> list[SolutionTuple]:
    """All solution tuples for (d, lambda) in the documented deterministic order."""
    out = []
    for u, k, tag in _raw(d, lam):
        if CHECK_TUPLES:
            _check(u, k, d, lam, tag)
        out.append(SolutionTuple(u, k))
    return out


def solution_scale(d: int, lam: int) -> int:
    """Factor mapping u_j to J*_{t_j}: 2^d for odd lambda, 2^(d+1) for even."""
    return 1 << (d if lam % 2 else d + 1)


def to_jstar(sol: SolutionTuple, d: int, lam: int) -> JStar:
    c = solution_scale(d, lam)
    return JStar(tuple(c * x for x in sol.u), d + 2)


def jstars(d: int, lam: int) -> list[JStar]:
    return [to_jstar(s, d, lam) for s in solutions(d, lam)]


def count(d: int, lam: int) -> int:
    """g(lambda, d) = f(lambda 2^d), by full generation."""
    ArrayParams(d, lam)
    return sum(1 for _ in _raw(d, lam))


def solutions_d_plus_1(d: int, lam: int) -> list[tuple[int, int]]:
    """(u, k) with lambda + u = 2k, k >= 0, -lambda <= u <= 0; k ascending.

    Each gives the OA(lambda 2^d, d+1, 2, d) whose only nonzero J-characteristic
    besides J_phi is J_{Z_{d+1}} = 2^d u.
    """
    ArrayParams(d, lam)
    return [(2 * k - lam, k) for k in range(0, lam // 2 + 1)]
