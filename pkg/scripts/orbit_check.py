"""Cross-check the closed-form enumeration against brute-force orbit enumeration."""

import argparse
import time
from dataclasses import dataclass

from oaenum import canonicalize, jstars
from oaenum.oracle import oracle_classes


@dataclass(frozen=True)
class Config:
    max_lambda: tuple[int, ...] = (6, 4, 3)  # for d = 2, 3, 4


def check(d: int, lam: int) -> tuple[int, int, bool]:
    closed = jstars(d, lam)
    classes = oracle_classes(d, lam)
    labels = {canonicalize(min(members)) for members in classes.values()}
    consistent = all(len({canonicalize(x) for x in members}) == 1 for members in classes.values())
    return len(closed), len(classes), consistent and labels == set(closed)


def main(cfg: Config) -> int:
    failures = 0
    for d, top in zip((2, 3, 4), cfg.max_lambda):
        for lam in range(1, top + 1):
            start = time.perf_counter()
            n_closed, n_oracle, ok = check(d, lam)
            failures += not ok
            print(f"d={d} lambda={lam:2d}  closed form {n_closed:4d}  oracle {n_oracle:4d}  "
                  f"{'ok' if ok else 'MISMATCH'}  {time.perf_counter() - start:.2f}s")
    return failures


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-lambda", type=int, nargs=3, default=Config.max_lambda, metavar=("D2", "D3", "D4"))
    args = ap.parse_args()
    raise SystemExit(main(Config(max_lambda=tuple(args.max_lambda))))
