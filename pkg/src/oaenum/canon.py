"""Shortened J-vectors of OA(n, d+2, 2, d)'s and their canonical J* form.

Slot ``j`` (1-based) of a shortened vector holds ``J_{t_j}`` with
``t_j = Z_m minus {m+1-j}`` for ``j <= m`` and ``t_{m+1} = Z_m``.  Column
permutations permute slots ``1..m``; switching the signs of columns by
``delta`` multiplies slot ``j`` by ``P * delta_{m+1-j}`` and slot ``m+1`` by
``P``, where ``P`` is the product of all ``delta_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .errors import ShapeError, UnsupportedDropError
from .jchar import Design, j_full, j_strength, n_vector
from .subsets import check_m, complement_slot_masks


@dataclass(frozen=True)
class JShort:
    entries: tuple[int, ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        check_m(self.m)
        if len(self.entries) != self.m + 1:
            raise ShapeError(f"shortened J-vector for m={self.m} needs {self.m + 1} entries, got {len(self.entries)}")

    @classmethod
    def of(cls, entries: Sequence[int]) -> "JShort":
        return cls(tuple(entries), len(entries) - 1)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return " ".join(str(x) for x in self.entries)


def jstar_form(entries: Sequence[int]) -> str | None:
    """Which canonical inequality system the vector satisfies: "15", "16", "17" or None."""
    m = len(entries) - 1
    head, last = list(entries[:m]), entries[m]
    if m % 2 == 0:
        if all(head[i] <= head[i + 1] for i in range(m - 1)) and head[m - 1] <= -abs(last):
            return "15"
        if (
            all(head[i] <= head[i + 1] for i in range(m - 2))
            and head[m - 2] <= -abs(head[m - 1])
            and last < -abs(head[m - 1])
        ):
            return "16"
        return None
    if all(head[i] <= head[i + 1] for i in range(m - 2)) and head[m - 2] <= -abs(head[m - 1]) and last <= 0:
        return "17"
    return None


@dataclass(frozen=True)
class JStar(JShort):
    """A shortened J-vector in canonical form."""

    def __post_init__(self):
        super().__post_init__()
        if jstar_form(self.entries) is None:
            raise ShapeError(f"({self}) is not in canonical J* form")

    @property
    def form(self) -> str:
        return jstar_form(self.entries)


@dataclass(frozen=True)
class SignAssignment:
    delta: tuple[int, ...]
    induced: tuple[int, ...]

    @classmethod
    def from_delta(cls, delta: Sequence[int]) -> "SignAssignment":
        delta = tuple(delta)
        m = len(delta)
        p = prod(delta)
        induced = tuple(p * delta[m - j] for j in range(1, m + 1)) + (p,)
        return cls(delta, induced)


def short_j(design: Design, d: int) -> JShort:
    if design.m != d + 2:
        raise ShapeError(f"design has {design.m} columns; OA of strength {d} here needs {d + 2}")
    jf = j_full(n_vector(design))
    s = j_strength(jf)
    if s < d:
        raise ShapeError(f"design has strength {s} < {d}")
    return JShort(tuple(int(jf.values[t]) for t in complement_slot_masks(design.m)), design.m)


def solve_signs(targets: Sequence[int | None], free: int | None = None) -> SignAssignment:
    """Column sign switches realizing ``targets`` on every slot except the free one.

    ``targets`` has m+1 entries in {-1, +1}; the free slot (1-based; may also be
    marked by ``None`` in ``targets``) receives whatever the defining word forces.
    """
    targets = list(targets)
    m = len(targets) - 1
    if free is None:
        free = targets.index(None) + 1
    if not 1 <= free <= m + 1:
        raise UnsupportedDropError(f"free slot {free} out of range 1..{m + 1}")
    if free == m + 1 and m % 2:
        raise UnsupportedDropError("for odd m the full-set slot m+1 cannot be left unconstrained")
    fixed = [t for j, t in enumerate(targets, 1) if j != free]
    if any(t not in (-1, 1) for t in fixed):
        raise ValueError("constrained targets must be -1 or +1")

    delta = [0] * m
    if free == m + 1:
        p = prod(targets[:m])
        for j in range(1, m + 1):
            delta[m - j] = p * targets[j - 1]
    else:
        p = targets[m]
        for j in range(1, m + 1):
            if j != free:
                delta[m - j] = p * targets[j - 1]
        # The product of all delta_i is p.
        delta[m - free] = p * prod(x for i, x in enumerate(delta) if i != m - free)
    sa = SignAssignment.from_delta(delta)
    assert all(sa.induced[j - 1] == targets[j - 1] for j in range(1, m + 2) if j != free)
    return sa


def _sign_target(x: int) -> int:
    # zero counts as already nonpositive
    return -1 if x > 0 else 1


def canonicalize(jshort: JShort | Sequence[int]) -> JStar:
    entries = list(jshort.entries if isinstance(jshort, JShort) else jshort)
    m = len(entries) - 1
    head_abs = [abs(x) for x in entries[:m]]
    low = min(head_abs)
    if m % 2 == 0 and abs(entries[m]) <= low:
        targets = [_sign_target(x) for x in entries[:m]] + [None]
        sa = solve_signs(targets, m + 1)
        flipped = [s * x for s, x in zip(sa.induced, entries)]
        out = sorted(flipped[:m]) + [flipped[m]]
    else:
        jp = head_abs.index(low) + 1
        targets = [None if j == jp else _sign_target(x) for j, x in enumerate(entries, 1)]
        sa = solve_signs(targets, jp)
        flipped = [s * x for s, x in zip(sa.induced, entries)]
        rest = sorted(x for j, x in enumerate(flipped[:m], 1) if j != jp)
        out = rest + [flipped[jp - 1], flipped[m]]
    return JStar(tuple(out), m)


def isomorphic(a: Design, b: Design, d: int) -> bool:
    if (a.n, a.m) != (b.n, b.m):
        raise ShapeError(f"designs have different shapes {(a.n, a.m)} and {(b.n, b.m)}")
    return canonicalize(short_j(a, d)) == canonicalize(short_j(b, d))
