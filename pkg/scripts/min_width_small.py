"""Exhaustive clique-width of small graphs around C5.

Settles the smallest width of C5 itself and of its joins with small
cliques, and contrasts them with what the near-uniform builder emits.

    python scripts/min_width_small.py
"""

from __future__ import annotations

import time

from holeforge.c5 import classify_atom_with_c5
from holeforge.cliquewidth import build_from_near_uniform, evaluate, min_width, width
from holeforge.graph import complete_graph, cycle_graph, join
from holeforge.structure import near_uniform_from_sets


def built_width(G, outcome) -> int:
    sets = [frozenset([v]) for v in outcome.hole.vertices]
    names = [f"h{i + 1}" for i in range(5)]
    if outcome.clique:
        sets.append(frozenset(outcome.clique))
        names.append("W")
    E = build_from_near_uniform(G, near_uniform_from_sets(G, sets, names))
    assert evaluate(E).equals(G)
    return width(E)


def main() -> None:
    cases = [("C5", cycle_graph(5))]
    for k in (1, 2):
        cases.append((f"K{k} join C5", join(complete_graph(k), cycle_graph(5))))
    cases += [("C6", cycle_graph(6)), ("C7", cycle_graph(7))]
    print(f"{'graph':<12} {'min width':>9} {'builder':>8} {'seconds':>8}")
    for name, G in cases:
        t0 = time.perf_counter()
        w = min_width(G, max_k=4)
        dt = time.perf_counter() - t0
        built = built_width(G, classify_atom_with_c5(G)) if name != "C6" and name != "C7" else "-"
        print(f"{name:<12} {w!s:>9} {built!s:>8} {dt:8.2f}")


if __name__ == "__main__":
    main()
