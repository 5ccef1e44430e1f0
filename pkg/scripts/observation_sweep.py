"""Audit the hole partitions of many seeded in-class graphs.

Prints per-claim failure counts and how often each kind of set is
occupied, for C7 and C5 holes.

    python scripts/observation_sweep.py --count 500 --hole c7
"""

from __future__ import annotations

import argparse
import json
from collections import Counter
from dataclasses import asdict, dataclass

from holeforge.c5 import audit_c5, build_c5_partition, find_c5
from holeforge.c7 import audit_c7, build_c7_partition, find_c7
from holeforge.generate import TemplateSpec, Unrealizable, c7_template, random_in_class


@dataclass
class SweepConfig:
    hole: str = "c7"
    count: int = 300
    seed: int = 0
    max_n: int = 16
    template_share: float = 0.5  # C7 only: fraction of graphs from templates


def graphs(cfg: SweepConfig):
    made = 0
    seed = cfg.seed
    while made < cfg.count:
        G = None
        if cfg.hole == "c7" and (seed % 100) < cfg.template_share * 100:
            try:
                G = c7_template(TemplateSpec.random(seed, density=0.35))
            except Unrealizable:
                pass
        else:
            lo = 7 if cfg.hole == "c7" else 5
            G = random_in_class(lo + seed % (cfg.max_n - lo + 1), seed, require=cfg.hole)
        seed += 1
        if G is not None:
            made += 1
            yield G


def sweep(cfg: SweepConfig) -> dict:
    find, build, audit = (
        (find_c7, build_c7_partition, audit_c7) if cfg.hole == "c7" else (find_c5, build_c5_partition, audit_c5)
    )
    failures = Counter()
    occupied = Counter()
    examples = {}
    for G in graphs(cfg):
        P = build(G, find(G))
        for name, s in P.named_sets():
            if s:
                occupied[name.rstrip("0123456789")] += 1
        for r in audit(G, P).failures():
            failures[r.claim] += 1
            examples.setdefault(r.claim, {"n": G.n, "edges": list(G.edges()), "witness": r.witness})
    return {
        "config": asdict(cfg),
        "claim_failures": dict(sorted(failures.items())),
        "nonempty_set_counts": dict(sorted(occupied.items())),
        "first_counterexamples": examples,
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f, default in asdict(SweepConfig()).items():
        ap.add_argument(f"--{f.replace('_', '-')}", type=type(default), default=default)
    cfg = SweepConfig(**vars(ap.parse_args()))
    print(json.dumps(sweep(cfg), indent=2))


if __name__ == "__main__":
    main()
