"""Count (4K1, C4, C6)-free graphs on up to 7 vertices.

For each n: labelled count (n <= 6), count up to isomorphism, how many of
those contain a C5 / C7, and a check that the hole-free ones have
chromatic number equal to clique number.

    python scripts/enumeration_counts.py --max-n 7
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from holeforge.coloring import exact_chromatic, max_clique
from holeforge.detection import class_report
from holeforge.generate import ENUMERATE_MAX, enumerate_small


@dataclass
class CountConfig:
    max_n: int = ENUMERATE_MAX
    labelled_max_n: int = 6


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=CountConfig.max_n)
    ap.add_argument("--labelled-max-n", type=int, default=CountConfig.labelled_max_n)
    cfg = CountConfig(**vars(ap.parse_args()))
    print(f"{'n':>2} {'labelled':>9} {'classes':>8} {'with C5':>8} {'with C7':>8} {'hole-free':>9} {'chi=omega':>9}")
    for n in range(1, cfg.max_n + 1):
        labelled = sum(1 for _ in enumerate_small(n)) if n <= cfg.labelled_max_n else "-"
        classes = c5 = c7 = free = good = 0
        for G in enumerate_small(n, dedup=True):
            classes += 1
            r = class_report(G)
            c5 += r.c5_present
            c7 += r.c7_present
            if r.perfect:
                free += 1
                good += exact_chromatic(G)[0] == max_clique(G).size
        print(f"{n:>2} {labelled!s:>9} {classes:>8} {c5:>8} {c7:>8} {free:>9} {good:>9}")


if __name__ == "__main__":
    main()
