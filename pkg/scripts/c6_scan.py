"""ex_H(n, C6) over every enumerable n against 8(n-1)/5."""

import argparse
import csv
import sys
import warnings
from dataclasses import dataclass

from halinturan.enumeration import HARD_LIMIT, conjecture_scan


@dataclass
class Config:
    forbid: int = 6
    n_min: int = 4
    n_max: int = HARD_LIMIT
    jobs: int = 1


def main(cfg: Config) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        rows = conjecture_scan(range(cfg.n_min, cfg.n_max + 1), cfg.forbid, limit=HARD_LIMIT, jobs=cfg.jobs)
    w = csv.writer(sys.stdout)
    w.writerow(["n", "value", "bound", "exceeds", "in_stated_range"])
    for r in rows:
        w.writerow([r.n, "" if r.value is None else r.value, f"{r.bound:.1f}", r.exceeds, r.in_stated_range])
    hits = [r.n for r in rows if r.exceeds and r.in_stated_range]
    print(f"# counterexamples in range: {hits or 'none'}", file=sys.stderr)
    return 1 if hits else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--forbid", type=int, default=6)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=HARD_LIMIT)
    p.add_argument("--jobs", type=int, default=1)
    sys.exit(main(Config(**vars(p.parse_args()))))
