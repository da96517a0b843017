"""Apply every reduction site of a seeded random C4-free corpus and tally the
edge deltas.  Any delta off its rule constant is printed and fails the run.
"""

import argparse
import sys
from collections import Counter
from dataclasses import dataclass

from halinturan.constructions import random_c4free_halin
from halinturan.core import validate
from halinturan.cycles import has_c4
from halinturan.reductions import (
    EDGE_DELTA,
    Rule,
    apply_rule,
    contraction_sites,
    leaf_removal_sites,
    smoothing_sites,
)

SITES = {Rule.LEAF_REMOVAL: leaf_removal_sites, Rule.SMOOTHING: smoothing_sites,
         Rule.CONTRACTION: contraction_sites}


@dataclass
class Config:
    graphs: int = 1000
    n_min: int = 16
    n_max: int = 60
    seed: int = 0


def main(cfg: Config) -> int:
    tally, bad = Counter(), 0
    span = cfg.n_max - cfg.n_min + 1
    for i in range(cfg.graphs):
        s = cfg.seed + i
        g = random_c4free_halin(cfg.n_min + s % span, s)
        for rule, gen in SITES.items():
            for site in gen(g):
                st = apply_rule(g, rule, site)
                tally[rule.value, st.edge_delta] += 1
                if st.edge_delta != EDGE_DELTA[rule] or not validate(st.result) or has_c4(st.result.sorted_neighbors):
                    bad += 1
                    print(f"seed {s}: {rule.value} at {site} -> delta {st.edge_delta}")
    for (rule, delta), c in sorted(tally.items()):
        print(f"{rule:13s} delta {delta}: {c}")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name in ("graphs", "n_min", "n_max", "seed"):
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=getattr(Config, name))
    sys.exit(main(Config(**vars(p.parse_args()))))
