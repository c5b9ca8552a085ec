"""Print the six published count tables and the time taken to compute them."""

import argparse
import time
from dataclasses import dataclass

from oaenum.cli import table_lines

# (d, lambda parity, largest n) for each table, in publication order.
TABLES = [(2, "odd", 204), (4, "odd", 624), (2, "even", 200), (4, "even", 576), (3, "odd", 408), (3, "even", 400)]


@dataclass(frozen=True)
class Config:
    jobs: int = 1
    wide: bool = False


def render(lines: list[str], wide: bool) -> str:
    if not wide:
        return "\n".join(lines)
    rows = [line.split("\t") for line in lines[2:]]
    return "\n".join([lines[0], "n\t" + "\t".join(r[0] for r in rows), "f(n)\t" + "\t".join(r[1] for r in rows)])


def main(cfg: Config) -> None:
    start = time.perf_counter()
    for d, parity, max_n in TABLES:
        print(render(table_lines(d, parity, max_n, cfg.jobs), cfg.wide))
        print()
    print(f"# computed in {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--wide", action="store_true", help="one row of n and one row of f(n) per table")
    main(Config(**vars(ap.parse_args())))
