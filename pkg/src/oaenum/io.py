"""Text formats for arrays and solution lists.

Array file::

    # optional comment lines
    OA n m 2 d
    1 -1 1 1
    ...            (n rows of m tokens, each -1 or 1)

Several arrays may be concatenated in one stream; each starts with its own
``OA`` header.  A solution list holds one tuple per line, ``u_1 ... u_{m+1} k``.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import MalformedDesignError, ParseError
from .jchar import Design


def format_array(design: Design, d: int, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"OA {design.n} {design.m} 2 {d}")
    lines.extend(" ".join(str(int(x)) for x in row) for row in design.rows)
    return "\n".join(lines) + "\n"


def write_array(path, design: Design, d: int, comment: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(format_array(design, d, comment))


def _content_lines(text: Iterable[str]):
    for lineno, raw in enumerate(text, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_arrays(text: str | Iterable[str]) -> list[tuple[Design, int]]:
    """All (design, d) pairs in a stream, in file order."""
    if isinstance(text, str):
        text = text.splitlines()
    lines = list(_content_lines(text))
    out = []
    i = 0
    while i < len(lines):
        lineno, line = lines[i]
        tok = line.split()
        if tok[0] != "OA":
            raise ParseError(f"expected header 'OA n m 2 d', got {line!r}", lineno)
        if len(tok) != 5:
            raise ParseError("header must read 'OA n m 2 d'", lineno)
        try:
            n, m, s, d = (int(x) for x in tok[1:])
        except ValueError:
            raise ParseError(f"non-integer field in header {line!r}", lineno) from None
        if s != 2:
            raise ParseError(f"only two-level arrays are supported, header says s={s}", lineno)
        if n < 1 or m < 1 or d < 0:
            raise ParseError(f"bad header values n={n} m={m} d={d}", lineno)
        rows = []
        for r in range(n):
            i += 1
            if i >= len(lines):
                raise ParseError(f"expected {n} rows, found {r}", lineno)
            rl, row_line = lines[i]
            vals = row_line.split()
            if vals[0] == "OA":
                raise ParseError(f"expected {n} rows, found {r}", rl)
            if len(vals) != m:
                raise ParseError(f"row has {len(vals)} entries, expected {m}", rl)
            if any(v not in ("1", "-1") for v in vals):
                raise ParseError(f"entries must be -1 or 1: {row_line!r}", rl)
            rows.append([int(v) for v in vals])
        try:
            out.append((Design(np.array(rows, dtype=np.int8)), d))
        except MalformedDesignError as exc:
            raise ParseError(str(exc), lineno) from None
        i += 1
    if not out:
        raise ParseError("no array found", None)
    return out


def read_arrays(path) -> list[tuple[Design, int]]:
    with open(path) as fh:
        return parse_arrays(fh.read())


def read_array(path) -> tuple[Design, int]:
    arrays = read_arrays(path)
    if len(arrays) != 1:
        raise ParseError(f"{path}: expected one array, found {len(arrays)}")
    return arrays[0]


def format_solutions(tuples) -> str:
    return "".join(" ".join(str(x) for x in tuple(u) + (k,)) + "\n" for u, k in tuples)


def parse_solutions(text: str) -> list[tuple[tuple[int, ...], int]]:
    out = []
    width = None
    for lineno, line in _content_lines(text.splitlines()):
        try:
            vals = [int(x) for x in line.split()]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if width is None:
            width = len(vals)
        if len(vals) != width or width < 2:
            raise ParseError(f"expected {width} integers per line, got {len(vals)}", lineno)
        out.append((tuple(vals[:-1]), vals[-1]))
    return out
