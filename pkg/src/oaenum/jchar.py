"""Designs, run-multiplicity vectors and J-characteristics.

``J`` is the Walsh-Hadamard transform of the run-multiplicity vector ``N``
(both in Yates order), so ``j_full`` and ``n_from_j`` are the same integer
butterfly; the inverse additionally divides by ``2^m`` and insists on a
nonnegative integral result.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import InfeasibleJError, MalformedDesignError, ShapeError
from .subsets import check_m, popcount

# Every butterfly intermediate is bounded by sum(|x|); keep that below int64.
_INT64_SAFE = 1 << 62


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Design:
    """An n x m matrix over {-1, +1}, one row per run."""

    rows: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.rows)
        if a.ndim != 2:
            raise MalformedDesignError(f"design must be two-dimensional, got shape {a.shape}")
        if a.shape[0] == 0:
            raise MalformedDesignError("design has no runs")
        check_m(a.shape[1])
        if not np.all((a == 1) | (a == -1)):
            bad = np.argwhere((a != 1) & (a != -1))[0]
            raise MalformedDesignError(
                f"entry at row {bad[0] + 1}, column {bad[1] + 1} is {a[tuple(bad)]!r}; expected -1 or 1"
            )
        object.__setattr__(self, "rows", _frozen(a.astype(np.int8, copy=True)))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "Design":
        rows = [list(r) for r in rows]
        if len({len(r) for r in rows}) > 1:
            raise MalformedDesignError("rows have unequal lengths")
        return cls(np.array(rows))

    @property
    def n(self) -> int:
        return self.rows.shape[0]

    @property
    def m(self) -> int:
        return self.rows.shape[1]

    def relabel(self, row_perm=None, col_perm=None, signs=None) -> "Design":
        """Apply a row permutation, then a column permutation, then column sign switches.

        ``col_perm[i]`` is the source column placed at position ``i``.
        """
        a = self.rows
        if row_perm is not None:
            a = a[np.asarray(row_perm)]
        if col_perm is not None:
            a = a[:, np.asarray(col_perm)]
        if signs is not None:
            a = a * np.asarray(signs, dtype=np.int8)
        return Design(a)

    def __eq__(self, other):
        return isinstance(other, Design) and np.array_equal(self.rows, other.rows)

    def __hash__(self):
        return hash((self.rows.shape, self.rows.tobytes()))


@dataclass(frozen=True, eq=False)
class NVector:
    """Run multiplicities N_s in Yates order."""

    counts: np.ndarray
    m: int = field(init=False)

    def __post_init__(self):
        c = np.asarray(self.counts)
        size = c.shape[0] if c.ndim == 1 else -1
        if size < 4 or size & (size - 1):
            raise ShapeError(f"N-vector length {size} is not 2^m with m >= 2")
        if np.any(c < 0):
            raise InfeasibleJError("N-vector has a negative count")
        object.__setattr__(self, "counts", _frozen(c.astype(np.int64, copy=True)))
        object.__setattr__(self, "m", check_m(size.bit_length() - 1))

    @property
    def n(self) -> int:
        return int(self.counts.sum())

    def __eq__(self, other):
        return isinstance(other, NVector) and np.array_equal(self.counts, other.counts)

    def __hash__(self):
        return hash(self.counts.tobytes())

    def __getitem__(self, s: int) -> int:
        return int(self.counts[s])


@dataclass(frozen=True, eq=False)
class JFull:
    """All 2^m J-characteristics in Yates order."""

    values: np.ndarray
    m: int = field(init=False)

    def __post_init__(self):
        v = np.asarray(self.values)
        size = v.shape[0] if v.ndim == 1 else -1
        if size < 4 or size & (size - 1):
            raise ShapeError(f"J-vector length {size} is not 2^m with m >= 2")
        object.__setattr__(self, "values", _frozen(v.astype(np.int64, copy=True)))
        object.__setattr__(self, "m", check_m(size.bit_length() - 1))

    @property
    def n(self) -> int:
        return int(self.values[0])

    def __eq__(self, other):
        return isinstance(other, JFull) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())

    def __getitem__(self, t: int) -> int:
        return int(self.values[t])


def fwht(x: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform in natural (Yates) order, exact in int64.

    Returns a new array; ``m * 2^m`` additions.
    """
    x = np.array(x, dtype=np.int64)
    size = x.shape[0]
    if int(np.abs(x).sum()) >= _INT64_SAFE:
        raise OverflowError("transform input too large for exact int64 butterfly")
    h = 1
    while h < size:
        y = x.reshape(-1, 2, h)
        lo = y[:, 0, :].copy()
        hi = y[:, 1, :]
        y[:, 0, :] += hi
        y[:, 1, :] = lo - hi
        h <<= 1
    return x


def n_vector(design: Design) -> NVector:
    if not isinstance(design, Design):
        design = Design(np.asarray(design))
    weights = np.left_shift(np.int64(1), np.arange(design.m, dtype=np.int64))
    masks = (design.rows == -1).astype(np.int64) @ weights
    return NVector(np.bincount(masks, minlength=1 << design.m))


def j_full(nvec: NVector) -> JFull:
    return JFull(fwht(nvec.counts))


def n_from_j(jfull: JFull) -> NVector:
    """Inverse transform N = 2^-m H J, with the division checked."""
    raw = fwht(jfull.values)
    shift = jfull.m
    if np.any(raw & ((1 << shift) - 1)):
        s = int(np.flatnonzero(raw & ((1 << shift) - 1))[0])
        raise InfeasibleJError(f"N_{s} = {int(raw[s])}/2^{shift} is not an integer")
    counts = raw >> shift
    if np.any(counts < 0):
        s = int(np.flatnonzero(counts < 0)[0])
        raise InfeasibleJError(f"N_{s} = {int(counts[s])} is negative")
    return NVector(counts)


def design_from_n(nvec: NVector) -> Design:
    """Rows r_s repeated N_s times, ascending Yates order."""
    m = nvec.m
    s = np.arange(1 << m, dtype=np.int64)
    full = 1 - 2 * ((s[:, None] >> np.arange(m)) & 1)
    return Design(np.repeat(full, nvec.counts, axis=0))


def _orders(m: int) -> np.ndarray:
    return np.array([popcount(t) for t in range(1 << m)])


def strength(design: Design) -> int:
    """Largest d' with J_t = 0 for every 1 <= |t| <= d'."""
    jf = j_full(n_vector(design))
    orders = _orders(jf.m)
    nonzero = orders[(jf.values != 0) & (orders > 0)]
    return int(nonzero.min()) - 1 if nonzero.size else jf.m


def j_strength(jfull: JFull) -> int:
    orders = _orders(jfull.m)
    nonzero = orders[(jfull.values != 0) & (orders > 0)]
    return int(nonzero.min()) - 1 if nonzero.size else jfull.m


@dataclass(frozen=True)
class ParityReport:
    """mu_t = J_t / 2^d (None where not divisible) and every broken clause."""

    mu: dict
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def check_parity(jfull: JFull, params) -> ParityReport:
    """Divisibility and parity of mu_t = J_t / 2^d for an array of strength >= d.

    ``params`` needs ``d`` and ``lam``.  Violations are ``(t, expected, actual)``
    where ``expected`` is one of ``"divisible"``, ``"even"``, ``"odd"``.
    """
    d, lam = params.d, params.lam
    step = 1 << d
    mu: dict[int, int | None] = {}
    violations = []
    for t in range(1 << jfull.m):
        jt = int(jfull.values[t])
        if jt % step:
            mu[t] = None
            violations.append((t, "divisible", jt))
            continue
        mu_t = jt // step
        mu[t] = mu_t
        size = popcount(t)
        if lam % 2 == 0:
            expected = "even"
        elif d % 2 == 0:
            expected = "odd" if size in (d + 1, d + 2) else None
        else:
            expected = {d + 1: "odd", d + 2: "even"}.get(size)
        if expected is not None and (mu_t % 2 == 1) != (expected == "odd"):
            violations.append((t, expected, mu_t))
    return ParityReport(mu, violations)


def check_pair_bound(jfull: JFull, d: int) -> list[tuple[int, int]]:
    """Pairs (t1, t2) with 1 <= |t1 ^ t2| <= d and |J_t1| + |J_t2| > n.

    For d = 2 with odd index, any t with 1 <= |t| <= m-1 and |J_t| > 4*lambda - 4
    is reported as the degenerate pair (t, t).  Requires strength >= d.
    """
    if j_strength(jfull) < d:
        raise ShapeError(f"pair bound needs strength >= {d}; J-vector has strength {j_strength(jfull)}")
    n, m = jfull.n, jfull.m
    vals = jfull.values
    # A zero J_t cannot break the bound since |J| <= n always.
    support = [t for t in range(1, 1 << m) if vals[t] != 0]
    bad = []
    for i, t1 in enumerate(support):
        a = abs(int(vals[t1]))
        for t2 in support[i + 1:]:
            if 1 <= popcount(t1 ^ t2) <= d and a + abs(int(vals[t2])) > n:
                bad.append((t1, t2))
    lam, rem = divmod(n, 1 << d)
    if d == 2 and not rem and lam % 2 == 1:
        full = (1 << m) - 1
        for t in support:
            if t != full and abs(int(vals[t])) > 4 * lam - 4:
                bad.append((t, t))
    return bad
