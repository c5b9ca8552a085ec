"""Subsets of Z_m as bitmasks, Yates order, and Hadamard entries on demand.

Element ``j`` of ``Z_m = {1, ..., m}`` is bit ``j - 1`` of the mask, so the
Yates position of a subset is simply its mask value.  No Hadamard matrix is
ever materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import ParameterError

M_MIN = 2
M_MAX = 30


def check_m(m: int) -> int:
    if not isinstance(m, int) or not (M_MIN <= m <= M_MAX):
        raise ParameterError(f"number of columns m={m!r} outside supported range [{M_MIN}, {M_MAX}]")
    return m


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_of(elements: Iterable[int]) -> int:
    """Bitmask of a subset given by its 1-based elements."""
    mask = 0
    for j in elements:
        if j < 1:
            raise ParameterError(f"subset element {j} must be >= 1")
        mask |= 1 << (j - 1)
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def subset_label(mask: int) -> str:
    """Yates-style label: ``phi`` for the empty set, else the digits, e.g. ``{1,2,4}``."""
    if mask == 0:
        return "phi"
    return "{" + ",".join(str(j) for j in elements_of(mask)) + "}"


def run_row(s: int, m: int) -> tuple[int, ...]:
    """The run r_s: position j is -1 iff j is in s."""
    check_m(m)
    if not (0 <= s < (1 << m)):
        raise ParameterError(f"subset mask {s} does not fit in m={m} columns")
    return tuple(-1 if (s >> i) & 1 else 1 for i in range(m))


def hadamard_entry(s: int, t: int) -> int:
    """h_st = (-1)^|s & t|."""
    if s < 0 or t < 0:
        raise ParameterError("subset masks must be nonnegative")
    return -1 if popcount(s & t) & 1 else 1


def complement_slot_masks(m: int) -> tuple[int, ...]:
    """Masks of t_1, ..., t_{m+1}: t_j drops element m+1-j, t_{m+1} is all of Z_m."""
    check_m(m)
    full = (1 << m) - 1
    return tuple(full ^ (1 << (m - j)) for j in range(1, m + 1)) + (full,)


PARITY_CLASSES = (
    ("even", "odd"),
    ("even", "even"),
    ("odd", "odd"),
    ("odd", "even"),
)


@dataclass(frozen=True)
class ArrayParams:
    """Parameters of an OA(n, d+2, 2, d) with index lambda."""

    d: int
    lam: int
    m: int = field(init=False)
    n: int = field(init=False)

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 2:
            raise ParameterError(f"strength d={self.d!r} must be an integer >= 2")
        if not isinstance(self.lam, int) or self.lam < 1:
            raise ParameterError(f"index lambda={self.lam!r} must be an integer >= 1")
        check_m(self.d + 2)
        object.__setattr__(self, "m", self.d + 2)
        object.__setattr__(self, "n", self.lam << self.d)

    @classmethod
    def from_n(cls, n: int, m: int) -> "ArrayParams":
        d = m - 2
        if d < 2:
            raise ParameterError(f"m={m} gives strength d={d}; need m >= 4")
        if n % (1 << d):
            raise ParameterError(f"n={n} violates n = lambda * 2^d with d={d}: {n} is not a multiple of {1 << d}")
        return cls(d, n >> d)

    @property
    def lambda_star(self) -> int | None:
        return self.lam // 2 if self.lam % 2 == 0 else None

    @property
    def parity(self) -> tuple[str, str]:
        """(parity of d, parity of lambda)."""
        return ("even" if self.d % 2 == 0 else "odd", "even" if self.lam % 2 == 0 else "odd")

    @property
    def parity_label(self) -> str:
        pd, pl = self.parity
        return f"{pd} d, {pl} lambda"
