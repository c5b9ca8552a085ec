"""Command-line front end: ``oaenum <command> [flags]``.

Exit status: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from types import SimpleNamespace

from . import canon, construct, enumeration, io, jchar, oracle
from .errors import OAError
from .subsets import ArrayParams, subset_label

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _resolve(args, allow_d_plus_1: bool = False) -> tuple[int, int, int]:
    """(d, lambda, m) from --d/--lambda or --n/--m, checking n = lambda 2^d."""
    d, lam, n, m = args.d, args.lam, args.n, args.m
    if d is None and m is not None:
        d = m - 2
    if d is None:
        raise UsageError("give --d (with --lambda or --n) or --m (with --n)")
    if m is None:
        m = d + 2
    if m not in (d + 2, d + 1) or (m == d + 1 and not allow_d_plus_1):
        raise UsageError(f"m = {m} is not d+2 = {d + 2}" + (" or d+1" if allow_d_plus_1 else ""))
    if lam is None:
        if n is None:
            raise UsageError("give --lambda or --n")
        if n % (1 << d):
            raise UsageError(f"n = lambda * 2^d fails: n={n} is not a multiple of 2^{d}={1 << d}")
        lam = n >> d
    elif n is not None and n != lam << d:
        raise UsageError(f"n = lambda * 2^d fails: {n} != {lam} * 2^{d} = {lam << d}")
    if d < 2 or lam < 1:
        raise UsageError(f"need d >= 2 and lambda >= 1, got d={d}, lambda={lam}")
    return d, lam, m


def _oa_label(d: int, lam: int, m: int) -> str:
    return f"OA({lam << d}, {m}, 2, {d})"


def _oracle_solutions(d: int, lam: int) -> list[tuple[tuple[int, ...], int]]:
    params = ArrayParams(d, lam)
    scale = enumeration.solution_scale(d, lam)
    out = []
    for js in oracle.oracle_jstars(d, lam):
        k = int(construct.n_from_jshort(js, params)[0])
        out.append((tuple(x // scale for x in js.entries), k))
    return sorted(out, key=lambda t: (t[1], t[0]))


def cmd_count(args) -> int:
    d, lam, m = _resolve(args, allow_d_plus_1=True)
    if m == d + 1:
        value = len(enumeration.solutions_d_plus_1(d, lam))
        label = "d+1 constraints"
    else:
        value = len(oracle.oracle_classes(d, lam)) if args.oracle else enumeration.count(d, lam)
        label = ArrayParams(d, lam).parity_label
    print(f"{value}\t# f({lam << d}) nonisomorphic {_oa_label(d, lam, m)}; {label}")
    return EXIT_OK


def table_lines(d: int, parity: str, max_n: int, jobs: int = 1) -> list[str]:
    """n / f(n) rows for every lambda of the given parity with n <= max_n and f(n) > 0."""
    first = 1 if parity == "odd" else 2
    lams = list(range(first, (max_n >> d) + 1, 2))
    if jobs > 1 and len(lams) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            counts = list(pool.map(enumeration.count, [d] * len(lams), lams))
    else:
        counts = [enumeration.count(d, lam) for lam in lams]
    lines = [
        f"# f(n) = number of nonisomorphic OA(n, {d + 2}, 2, {d}), n = lambda * {1 << d}, lambda {parity}",
        "n\tf(n)",
    ]
    lines += [f"{lam << d}\t{c}" for lam, c in zip(lams, counts) if c > 0]
    return lines


def cmd_table(args) -> int:
    if args.d is None or args.d < 2:
        raise UsageError("table needs --d >= 2")
    lines = table_lines(args.d, args.parity, args.max_n, args.jobs)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_solutions(args) -> int:
    d, lam, m = _resolve(args, allow_d_plus_1=True)
    if m == d + 1:
        rows = [((u,), k) for u, k in enumeration.solutions_d_plus_1(d, lam)]
    elif args.oracle:
        rows = _oracle_solutions(d, lam)
    else:
        rows = [(s.u, s.k) for s in enumeration.solutions(d, lam)]
    _emit(io.format_solutions(rows), args.out)
    return EXIT_OK


def cmd_build(args) -> int:
    d, lam, m = _resolve(args, allow_d_plus_1=True)
    params = ArrayParams(d, lam)
    if m == d + 1:
        items = [
            (construct.build_d_plus_1(d, lam, u), f"u = {u}, k = {k}; J_Z = {u << d}")
            for u, k in enumeration.solutions_d_plus_1(d, lam)
        ]
    else:
        items = []
        for sol in enumeration.solutions(d, lam):
            js = enumeration.to_jstar(sol, d, lam)
            items.append((construct.build(js, params), f"solution {sol}\nJ* = {js}"))
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        width = max(3, len(str(len(items))))
        for i, (design, note) in enumerate(items, 1):
            io.write_array(outdir / f"oa_{params.n}_{m}_2_{d}_{i:0{width}d}.txt", design, d, note)
        print(f"wrote {len(items)} arrays to {outdir}")
    else:
        sys.stdout.write("".join(io.format_array(design, d, note) for design, note in items))
    return EXIT_OK


def cmd_canon(args) -> int:
    for design, d in io.read_arrays(args.file):
        print(canon.canonicalize(canon.short_j(design, d)))
    return EXIT_OK


def cmd_verify(args) -> int:
    status = EXIT_OK
    for design, d in io.read_arrays(args.file):
        if args.d is not None:
            d = args.d
        jf = jchar.j_full(jchar.n_vector(design))
        st = jchar.j_strength(jf)
        print(f"OA {design.n} {design.m} 2 {d}: strength {st}")
        if st < d:
            print(f"FAIL: strength {st} < {d}")
            status = EXIT_FAIL
            continue
        if design.n % (1 << d):
            print(f"FAIL: n={design.n} is not a multiple of 2^{d}")
            status = EXIT_FAIL
            continue
        rep = jchar.check_parity(jf, SimpleNamespace(d=d, lam=design.n >> d))
        pairs = jchar.check_pair_bound(jf, d)
        print(f"parity violations: {len(rep.violations)}")
        for t, expected, actual in rep.violations:
            print(f"  J_{subset_label(t)}: expected {expected}, got {actual}")
        print(f"pair-bound violations: {len(pairs)}")
        for t1, t2 in pairs:
            print(f"  J_{subset_label(t1)}, J_{subset_label(t2)}")
        if design.m == d + 2:
            print(f"J* = {canon.canonicalize(canon.short_j(design, d))}")
        if rep.violations or pairs:
            status = EXIT_FAIL
    return status


def cmd_iso(args) -> int:
    a, da = io.read_array(args.file_a)
    b, db = io.read_array(args.file_b)
    if da != db or (a.n, a.m) != (b.n, b.m):
        raise UsageError(f"shape mismatch: OA {a.n} {a.m} 2 {da} vs OA {b.n} {b.m} 2 {db}")
    print("isomorphic" if canon.isomorphic(a, b, da) else "nonisomorphic")
    return EXIT_OK


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oaenum",
        description="Enumerate nonisomorphic two-level OA(lambda 2^d, d+2, 2, d)'s.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p, oracle_flag=False):
        p.add_argument("--d", type=int, help="strength")
        p.add_argument("--lambda", dest="lam", type=int, help="index")
        p.add_argument("--n", type=int, help="run size, n = lambda * 2^d")
        p.add_argument("--m", type=int, help="constraints, d+2 (or d+1 where supported)")
        if oracle_flag:
            p.add_argument("--oracle", action="store_true", help="use the brute-force oracle (small cases only)")
        p.add_argument("--out", help="output path")

    p = sub.add_parser("count", help="number of nonisomorphic arrays")
    params(p, oracle_flag=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="n / f(n) table for one parity of lambda")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--parity", choices=("odd", "even"), required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("solutions", help="solution tuples u_1 .. u_{m+1} k")
    params(p, oracle_flag=True)
    p.set_defaults(func=cmd_solutions)

    p = sub.add_parser("build", help="write every catalog array")
    params(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("canon", help="J*-vector of each array in a file")
    p.add_argument("file")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("verify", help="strength and J-characteristic diagnostics")
    p.add_argument("file")
    p.add_argument("--d", type=int, help="override the strength in the header")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("iso", help="decide isomorphism of two arrays")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_iso)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"oaenum {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OAError, OSError) as exc:
        print(f"oaenum {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
