"""Brute-force cross-checks for the closed-form enumeration and the canonical form.

Searches J-space (the m+1 shortened J-characteristics) rather than array
space, and reduces isomorphism classes by exhaustive orbit enumeration under
all m! 2^m column permutations and sign switches, keeping the lexicographic
minimum.  Intended only for small instances.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .canon import JShort, JStar, canonicalize
from .errors import InfeasibleJError, SizeError
from .jchar import JFull, n_from_j
from .subsets import ArrayParams, complement_slot_masks, popcount

MAX_M = 7
MAX_GRID = 20_000_000


@lru_cache(maxsize=None)
def _slot_signs(m: int) -> tuple[tuple[int, ...], ...]:
    """Sign patterns induced on the m+1 slots by all 2^m column sign switches."""
    slots = complement_slot_masks(m)
    # Switching the columns in mask c multiplies J_t by (-1)^|c & t|.
    return tuple(
        tuple(-1 if popcount(c & t) & 1 else 1 for t in slots) for c in range(1 << m)
    )


def orbit(entries: tuple[int, ...]) -> set[tuple[int, ...]]:
    """All shortened J-vectors reachable by column permutation and sign switching."""
    m = len(entries) - 1
    if m > MAX_M:
        raise SizeError(f"orbit enumeration limited to m <= {MAX_M}, got m={m}")
    head, last = entries[:m], entries[m]
    perms = {tuple(head[i] for i in p) + (last,) for p in permutations(range(m))}
    signs = _slot_signs(m)
    return {tuple(s * x for s, x in zip(sg, p)) for p in perms for sg in signs}


def orbit_min(jshort: JShort | tuple[int, ...]) -> JShort:
    entries = tuple(jshort.entries if isinstance(jshort, JShort) else jshort)
    return JShort(min(orbit(entries)), len(entries) - 1)


def _grid_size(params: ArrayParams) -> int:
    return (2 * params.lam + 1) ** (params.m + 1)


def feasible_jshorts(d: int, lam: int) -> set[tuple[int, ...]]:
    """Every shortened J-vector of an OA(lambda 2^d, d+2, 2, d), by grid search.

    Candidates obey the divisibility and parity rules on mu = J / 2^d and the
    pair bound |mu_a| + |mu_b| <= lambda; survivors must invert to a valid
    run-multiplicity vector.
    """
    params = ArrayParams(d, lam)
    m, n = params.m, params.n
    if m > MAX_M or _grid_size(params) > MAX_GRID:
        raise SizeError(
            f"oracle limited to m <= {MAX_M} and (2*lambda+1)^(m+1) <= {MAX_GRID}; got d={d}, lambda={lam}"
        )
    if lam % 2 == 0:
        allowed = [x for x in range(-lam, lam + 1) if x % 2 == 0]
        slot_values = [allowed] * (m + 1)
    else:
        odd = [x for x in range(-lam, lam + 1) if x % 2 == 1]
        even = [x for x in range(-lam, lam + 1) if x % 2 == 0]
        slot_values = [odd] * m + [odd if d % 2 == 0 else even]

    slots = complement_slot_masks(m)
    step = 1 << d
    out = set()

    def rec(prefix: list[int], maxabs: int) -> None:
        i = len(prefix)
        if i == m + 1:
            values = np.zeros(1 << m, dtype=np.int64)
            values[0] = n
            for t, mu in zip(slots, prefix):
                values[t] = mu * step
            try:
                n_from_j(JFull(values))
            except InfeasibleJError:
                return
            out.add(tuple(mu * step for mu in prefix))
            return
        for v in slot_values[i]:
            if abs(v) + maxabs <= lam:
                prefix.append(v)
                rec(prefix, max(maxabs, abs(v)))
                prefix.pop()

    rec([], 0)
    return out


def oracle_classes(d: int, lam: int) -> dict[tuple[int, ...], frozenset]:
    """Isomorphism classes of feasible J-vectors keyed by their orbit minimum."""
    remaining = feasible_jshorts(d, lam)
    classes = {}
    while remaining:
        x = next(iter(remaining))
        members = orbit(x)
        if not members <= remaining:
            raise AssertionError(f"orbit of {x} leaves the feasible set")
        remaining -= members
        classes[min(members)] = frozenset(members)
    return classes


def oracle_jstars(d: int, lam: int) -> set[JStar]:
    return {canonicalize(rep) for rep in oracle_classes(d, lam)}
