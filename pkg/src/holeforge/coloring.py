"""Exact maximum clique and chromatic number by branch and bound."""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import Coloring
from .graph import Graph, is_clique_mask, lowest, mask_of, members


@dataclass(frozen=True)
class CliqueWitness:
    vertices: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def verify(self, G: Graph) -> bool:
        return is_clique_mask(G, mask_of(self.vertices))


def _greedy_bounds(G: Graph, P: int, order: list[int]) -> list[tuple[int, int]]:
    """Sequential colouring of P; returns (vertex, colour number) by colour."""
    out = []
    rest = P
    color = 0
    while rest:
        color += 1
        avail = rest
        while avail:
            v = next(u for u in order if avail >> u & 1)
            avail &= ~(1 << v) & ~G.adj[v]
            rest &= ~(1 << v)
            out.append((v, color))
    return out


def max_clique(G: Graph) -> CliqueWitness:
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    best = [0]

    def expand(R: int, size: int, P: int) -> None:
        for v, bound in reversed(_greedy_bounds(G, P, order)):
            if size + bound <= best[0].bit_count():
                return
            R2 = R | (1 << v)
            P2 = P & G.adj[v]
            if P2:
                expand(R2, size + 1, P2)
            elif size + 1 > best[0].bit_count():
                best[0] = R2
            P &= ~(1 << v)

    if G.n:
        expand(0, 0, G.full_mask)
    return CliqueWitness(frozenset(members(best[0])))


def degeneracy_order(G: Graph) -> list[int]:
    """Smallest-last order: repeatedly remove a minimum-degree vertex."""
    rest = G.full_mask
    removed = []
    while rest:
        v = min(members(rest), key=lambda u: ((G.adj[u] & rest).bit_count(), u))
        removed.append(v)
        rest &= ~(1 << v)
    return removed[::-1]


def dsatur(G: Graph) -> Coloring:
    rank = {v: i for i, v in enumerate(degeneracy_order(G))}
    colors: dict[int, int] = {}
    seen = [0] * G.n  # bitmask of neighbour colours
    uncolored = G.full_mask
    while uncolored:
        v = max(
            members(uncolored),
            key=lambda u: (seen[u].bit_count(), (G.adj[u] & uncolored).bit_count(), -rank[u]),
        )
        c = lowest(~seen[v])
        colors[v] = c
        uncolored &= ~(1 << v)
        for u in members(G.adj[v]):
            seen[u] |= 1 << c
    return Coloring(colors)


def exact_chromatic(G: Graph) -> tuple[int, Coloring]:
    """Optimal colouring via DSATUR branch and bound.

    A maximum clique is precoloured 0..w-1 (lower bound and symmetry
    breaking); greedy DSATUR gives the initial upper bound.
    """
    if G.n == 0:
        return 0, Coloring({})
    clique = max_clique(G)
    lower = clique.size
    best = dsatur(G)
    best_k = best.count
    if best_k == lower:
        return best_k, best.normalized()

    colors = [-1] * G.n
    seen = [0] * G.n
    for c, v in enumerate(sorted(clique.vertices)):
        colors[v] = c
        for u in members(G.adj[v]):
            seen[u] |= 1 << c
    uncolored = G.full_mask & ~mask_of(clique.vertices)
    result = [best_k, None]

    def search(uncolored: int, used: int) -> bool:
        if not uncolored:
            result[0] = used
            result[1] = list(colors)
            return used == lower
        v = max(
            members(uncolored),
            key=lambda u: (seen[u].bit_count(), (G.adj[u] & uncolored).bit_count(), -u),
        )
        c = -1
        while True:
            c += 1
            # only colourings strictly better than the incumbent are of interest
            if c > used or c >= result[0] - 1:
                return False
            if seen[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            for u in members(G.adj[v] & uncolored):
                if not seen[u] >> c & 1:
                    seen[u] |= 1 << c
                    touched.append(u)
            done = search(uncolored & ~(1 << v), max(used, c + 1))
            for u in touched:
                seen[u] &= ~(1 << c)
            colors[v] = -1
            if done:
                return True

    search(uncolored, lower)
    if result[1] is None:
        return best_k, best.normalized()
    return result[0], Coloring(dict(enumerate(result[1]))).normalized()


def verify_coloring(G: Graph, c: Coloring) -> bool:
    return c.is_proper(G)
