"""Slow, obviously-correct reference computations shared by the tests."""

from itertools import combinations

import numpy as np

from oaenum.subsets import hadamard_entry


def naive_j(design_rows, t):
    """J_t as a column sum of Hadamard products, straight from the rows."""
    total = 0
    for row in design_rows:
        p = 1
        for j in range(len(row)):
            if (t >> j) & 1:
                p *= int(row[j])
        total += p
    return total


def naive_transform(vec):
    """sum_s h_st x_s for every t, as a double loop over hadamard_entry."""
    size = len(vec)
    return [sum(hadamard_entry(s, t) * int(vec[s]) for s in range(size)) for t in range(size)]


def direct_strength(rows):
    """Largest d' such that every d'-column projection is a multiple of the full factorial."""
    rows = [tuple(int(x) for x in r) for r in rows]
    n, m = len(rows), len(rows[0])
    best = 0
    for dd in range(1, m + 1):
        if n % (1 << dd):
            break
        want = n >> dd
        ok = True
        for cols in combinations(range(m), dd):
            tally = {}
            for r in rows:
                key = tuple(r[c] for c in cols)
                tally[key] = tally.get(key, 0) + 1
            if len(tally) != 1 << dd or any(v != want for v in tally.values()):
                ok = False
                break
        if not ok:
            break
        best = dd
    return best


def full_factorial(m, copies=1):
    rows = [tuple(-1 if (s >> j) & 1 else 1 for j in range(m)) for s in range(1 << m)]
    return np.array(rows * copies, dtype=np.int8)


def random_relabel(design, rng):
    return design.relabel(
        row_perm=rng.permutation(design.n),
        col_perm=rng.permutation(design.m),
        signs=rng.choice(np.array([-1, 1], dtype=np.int8), size=design.m),
    )
