"""Exact ex_H(n, C4) for n = 16..20 next to the closed formula, plus the
per-longest-path audits for n = 16, 17, 18.

    python scripts/base_cases.py --out results/base_cases.json
"""

import argparse
import json
import time
import warnings
from dataclasses import asdict, dataclass
from pathlib import Path

from halinturan.constructions import theorem_value
from halinturan.enumeration import HARD_LIMIT, base_case_audit, extremal_number


@dataclass
class Config:
    n_min: int = 16
    n_max: int = HARD_LIMIT
    jobs: int = 1
    out: str | None = None


def main(cfg: Config) -> dict:
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        t0 = time.perf_counter()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            rec = extremal_number(n, 4, limit=HARD_LIMIT, jobs=cfg.jobs)
        dt = time.perf_counter() - t0
        rows.append({"n": n, "ex": rec.max_edges, "formula": theorem_value(n),
                     "num_extremal": rec.num_extremal, "total": rec.enumerated_total,
                     "seconds": round(dt, 2)})
        print(f"n={n:2d} ex={rec.max_edges} formula={theorem_value(n)} "
              f"extremal={rec.num_extremal} of {rec.enumerated_total} ({dt:.1f}s)")
    audits = []
    for n in (16, 17, 18):
        rep = base_case_audit(n)
        audits.append({"n": n, "passed": rep.passed, "checks": [asdict(c) for c in rep.checks]})
        for c in rep.checks:
            print(f"  n={n} [{'ok' if c.passed else 'FAIL'}] {c.claim}")
    result = {"config": asdict(cfg), "extremal": rows, "audits": audits}
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_text(json.dumps(result, indent=2) + "\n")
    return result


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in Config.__dataclass_fields__.values():
        p.add_argument(f"--{f.name.replace('_', '-')}", type=int if f.type in (int, "int") else str,
                       default=f.default)
    main(Config(**vars(p.parse_args())))
