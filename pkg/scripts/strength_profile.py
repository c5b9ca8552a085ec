"""Tabulate how many catalog arrays reach strength d+1 and d+2."""

import argparse
from collections import Counter
from dataclasses import dataclass

from oaenum import build_catalog, strength


@dataclass(frozen=True)
class Config:
    d: int = 2
    max_lambda: int = 24


def main(cfg: Config) -> None:
    print(f"# OA(lambda 2^{cfg.d}, {cfg.d + 2}, 2, {cfg.d}) catalogs by exact strength")
    print(f"lambda\ttotal\tstrength {cfg.d + 1}+\tstrength {cfg.d + 2}")
    for lam in range(1, cfg.max_lambda + 1):
        tally = Counter(strength(x) for x in build_catalog(cfg.d, lam))
        total = sum(tally.values())
        high = sum(v for s, v in tally.items() if s > cfg.d)
        print(f"{lam}\t{total}\t{high}\t{tally[cfg.d + 2]}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, default=Config.d)
    ap.add_argument("--max-lambda", type=int, default=Config.max_lambda)
    main(Config(**vars(ap.parse_args())))
