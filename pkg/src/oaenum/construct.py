"""Explicit arrays from J*-vectors, and a direct-count orthogonality check."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .canon import JShort
from .enumeration import jstars, solutions_d_plus_1
from .errors import InfeasibleJError, ShapeError
from .jchar import Design, NVector, design_from_n
from .subsets import ArrayParams, complement_slot_masks, popcount


def n_from_jshort(jshort: JShort, params: ArrayParams) -> NVector:
    """N_s = 2^-m (n + sum_j h_{s t_j} J_{t_j}), one s at a time."""
    m = params.m
    if jshort.m != m:
        raise ShapeError(f"J-vector is for m={jshort.m}, parameters give m={m}")
    slots = complement_slot_masks(m)
    entries = jshort.entries
    mask = (1 << m) - 1
    counts = []
    for s in range(1 << m):
        acc = params.n
        for t, jt in zip(slots, entries):
            acc += -jt if popcount(s & t) & 1 else jt
        if acc & mask:
            raise InfeasibleJError(f"N_{s} = {acc}/2^{m} is not an integer")
        if acc < 0:
            raise InfeasibleJError(f"N_{s} = {acc >> m} is negative")
        counts.append(acc >> m)
    return NVector(np.array(counts, dtype=np.int64))


def build(jstar: JShort, params: ArrayParams) -> Design:
    """The array with this J-vector; runs in ascending Yates order, repeats adjacent."""
    return design_from_n(n_from_jshort(jstar, params))


def build_catalog(d: int, lam: int) -> list[Design]:
    params = ArrayParams(d, lam)
    return [build(x, params) for x in jstars(d, lam)]


def build_d_plus_1(d: int, lam: int, u: int) -> Design:
    """OA(lambda 2^d, d+1, 2, d) whose only nonzero J beyond J_phi is J_{Z_{d+1}} = 2^d u."""
    m = d + 1
    full = (1 << m) - 1
    counts = []
    for s in range(1 << m):
        num = lam - u if popcount(s & full) & 1 else lam + u
        if num < 0 or num % 2:
            raise InfeasibleJError(f"u={u} is not admissible for lambda={lam}")
        counts.append(num // 2)
    return design_from_n(NVector(np.array(counts, dtype=np.int64)))


def d_plus_1_catalog(d: int, lam: int) -> list[Design]:
    return [build_d_plus_1(d, lam, u) for u, _ in solutions_d_plus_1(d, lam)]


def verify_oa(design: Design, d: int) -> bool:
    """Every d columns show each of the 2^d sign patterns exactly n / 2^d times.

    Counts level combinations directly; no J-characteristics involved.
    """
    n, m = design.n, design.m
    if d < 0 or d > m or n % (1 << d):
        return False
    lam = n >> d
    bits = (design.rows == -1).astype(np.int64)
    weights = 1 << np.arange(d, dtype=np.int64)
    for cols in combinations(range(m), d):
        codes = bits[:, cols] @ weights
        tally = np.bincount(codes, minlength=1 << d)
        if np.any(tally != lam):
            return False
    return True
