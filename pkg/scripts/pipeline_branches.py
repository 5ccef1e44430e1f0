"""Which pipeline branch colours the atoms of random in-class graphs.

    python scripts/pipeline_branches.py --count 300 --max-n 12
"""

from __future__ import annotations

import argparse
import time
from collections import Counter
from dataclasses import dataclass

from holeforge.coloring import exact_chromatic
from holeforge.generate import random_in_class
from holeforge.pipeline import color_in_class


@dataclass
class BranchConfig:
    count: int = 300
    max_n: int = 12
    seed: int = 0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=BranchConfig.count)
    ap.add_argument("--max-n", type=int, default=BranchConfig.max_n)
    ap.add_argument("--seed", type=int, default=BranchConfig.seed)
    cfg = BranchConfig(**vars(ap.parse_args()))
    branches = Counter()
    mismatches = 0
    t0 = time.perf_counter()
    for i in range(cfg.count):
        s = cfg.seed + i
        require = (None, "c5", "c7")[s % 3]
        G = random_in_class(7 + s % (cfg.max_n - 6), s, require=require, twin_free=s % 2 == 0)
        if G is None:
            continue
        col, trace = color_in_class(G)
        mismatches += col.count != exact_chromatic(G)[0]
        branches.update(a.branch for a in trace.atoms)
    print(f"{cfg.count} graphs in {time.perf_counter() - t0:.1f}s, {mismatches} colour-count mismatches")
    for name, k in branches.most_common():
        print(f"  {name:<16} {k}")


if __name__ == "__main__":
    main()
