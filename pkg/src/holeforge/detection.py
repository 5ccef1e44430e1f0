"""Induced-pattern search for the six patterns the class theory cares about.

The search is a backtracking extension over template positions: position
``j`` may only take vertices adjacent to the images of its template
neighbours and non-adjacent to the images of its template non-neighbours,
so every partial tuple is already an induced copy of a template prefix.
Symmetry breaking keeps one representative per automorphism class where
that is cheap (cycles, 4K1, the twin pair of the C5-twin).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator

from .graph import Graph, lowest


class Pattern(enum.Enum):
    FOUR_K1 = "4K1"
    C4 = "C4"
    C5 = "C5"
    C6 = "C6"
    C7 = "C7"
    C5_TWIN = "C5-twin"

    @property
    def size(self) -> int:
        return len(TEMPLATES[self])

    def template_edges(self) -> list[tuple[int, int]]:
        adj = TEMPLATES[self]
        return [(u, v) for u in range(len(adj)) for v in range(u + 1, len(adj)) if adj[u] >> v & 1]


def _template(k: int, edges) -> tuple[int, ...]:
    adj = [0] * k
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj)


def _cycle(k: int) -> tuple[int, ...]:
    return _template(k, [(i, (i + 1) % k) for i in range(k)])


# C5-twin as drawn: vertices 1..6 shifted to 0..5; 2 and 5 are the twins.
C5_TWIN_EDGES = [(0, 1), (0, 4), (1, 2), (1, 5), (2, 3), (2, 5), (3, 4), (3, 5)]

TEMPLATES: dict[Pattern, tuple[int, ...]] = {
    Pattern.FOUR_K1: _template(4, []),
    Pattern.C4: _cycle(4),
    Pattern.C5: _cycle(5),
    Pattern.C6: _cycle(6),
    Pattern.C7: _cycle(7),
    Pattern.C5_TWIN: _template(6, C5_TWIN_EDGES),
}

CYCLES = {Pattern.C4: 4, Pattern.C5: 5, Pattern.C6: 6, Pattern.C7: 7}
FORBIDDEN = (Pattern.FOUR_K1, Pattern.C4, Pattern.C6)


@dataclass(frozen=True)
class Embedding:
    pattern: Pattern
    vertices: tuple[int, ...]

    def verify(self, G: Graph) -> bool:
        return matches_template(G, TEMPLATES[self.pattern], self.vertices)


def matches_template(G: Graph, template: tuple[int, ...], vertices) -> bool:
    k = len(template)
    if len(vertices) != k or len(set(vertices)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            if bool(template[a] >> b & 1) != G.has_edge(vertices[a], vertices[b]):
                return False
    return True


def _search(G: Graph, pattern: Pattern, within: int | None) -> Iterator[tuple[int, ...]]:
    template = TEMPLATES[pattern]
    k = len(template)
    base = G.full_mask if within is None else within
    if base.bit_count() < k:
        return
    adj = G.adj
    cycle = pattern in CYCLES
    image = [0] * k

    def extend(j: int, used: int) -> Iterator[tuple[int, ...]]:
        if j == k:
            yield tuple(image)
            return
        cand = base & ~used
        for t in range(j):
            if template[j] >> t & 1:
                cand &= adj[image[t]]
            else:
                cand &= ~adj[image[t]]
        if cycle or pattern is Pattern.FOUR_K1:
            # First position holds the minimum of the tuple.
            if j > 0:
                cand &= ~((1 << (image[0] + 1)) - 1)
            if pattern is Pattern.FOUR_K1 and j > 0:
                cand &= ~((1 << (image[j - 1] + 1)) - 1)
            if cycle and j == k - 1:
                cand &= ~((1 << (image[1] + 1)) - 1)
        elif pattern is Pattern.C5_TWIN and j == 5:
            cand &= ~((1 << (image[2] + 1)) - 1)
        while cand:
            v = lowest(cand)
            cand &= cand - 1
            image[j] = v
            yield from extend(j + 1, used | (1 << v))

    yield from extend(0, 0)


def iter_induced(G: Graph, P: Pattern, within: int | None = None) -> Iterator[Embedding]:
    """All induced copies of P, one per template automorphism class where broken."""
    for t in _search(G, P, within):
        yield Embedding(P, t)


def find_induced(G: Graph, P: Pattern, within: int | None = None) -> Embedding | None:
    """First induced copy of P in lexicographic search order, or None."""
    return next(iter_induced(G, P, within), None)


@dataclass(frozen=True)
class ClassReport:
    witnesses: dict[Pattern, Embedding | None] = field(hash=False)

    @property
    def member(self) -> bool:
        return all(self.witnesses[p] is None for p in FORBIDDEN)

    @property
    def c5_present(self) -> bool:
        return self.witnesses[Pattern.C5] is not None

    @property
    def c7_present(self) -> bool:
        return self.witnesses[Pattern.C7] is not None

    @property
    def c5twin_present(self) -> bool:
        return self.witnesses[Pattern.C5_TWIN] is not None

    @property
    def perfect(self) -> bool:
        """Perfect by SPGT when in the class and free of C5 and C7."""
        return self.member and not self.c5_present and not self.c7_present

    def forbidden_witness(self) -> Embedding | None:
        for p in FORBIDDEN:
            if self.witnesses[p] is not None:
                return self.witnesses[p]
        return None


def class_report(G: Graph) -> ClassReport:
    return ClassReport({p: find_induced(G, p) for p in Pattern})


def is_member(G: Graph) -> bool:
    return all(find_induced(G, p) is None for p in FORBIDDEN)
