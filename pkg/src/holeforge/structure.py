"""Types shared by the hole-neighbourhood modules: hole embeddings, audit
reports, and (near-)uniform clique partitions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .detection import FORBIDDEN, Embedding, Pattern, find_induced
from .graph import (
    Graph,
    UniformStatus,
    is_clique_mask,
    joined_status,
    mask_of,
    members,
    nonadjacent_pair,
)


class StructureError(Exception):
    pass


@dataclass(frozen=True)
class HoleEmbedding:
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return mask_of(self.vertices)

    def __getitem__(self, i: int) -> int:
        return self.vertices[i % len(self.vertices)]

    def verify(self, G: Graph) -> bool:
        k = len(self.vertices)
        if k not in (5, 7) or len(set(self.vertices)) != k:
            return False
        for a in range(k):
            for b in range(a + 1, k):
                consecutive = (b - a) in (1, k - 1)
                if G.has_edge(self.vertices[a], self.vertices[b]) != consecutive:
                    return False
        return True

    def trace(self, G: Graph, v: int) -> int:
        """Bitmask over hole positions adjacent to v."""
        t = 0
        for i, h in enumerate(self.vertices):
            if G.adj[v] >> h & 1:
                t |= 1 << i
        return t

    @classmethod
    def from_embedding(cls, e: Embedding) -> HoleEmbedding:
        if e.pattern not in (Pattern.C5, Pattern.C7):
            raise ValueError(f"{e.pattern.value} is not a C5/C7 hole")
        return cls(e.vertices)


class UnclassifiableVertex(StructureError):
    """A vertex whose hole trace matches no set; the graph is outside the class."""

    def __init__(self, vertex: int, trace: tuple[int, ...], witness: Embedding | None):
        self.vertex = vertex
        self.trace = trace
        self.witness = witness
        w = f"; witness {witness.pattern.value} {witness.vertices}" if witness else ""
        super().__init__(f"vertex {vertex} has hole trace {trace}{w}")


def local_forbidden_witness(G: Graph, hole: HoleEmbedding, v: int) -> Embedding | None:
    """Forbidden pattern inside hole + v, else anywhere in G."""
    within = hole.mask | (1 << v)
    for scope in (within, None):
        for p in FORBIDDEN:
            e = find_induced(G, p, scope)
            if e is not None:
                return e
    return None


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    description: str
    passed: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""


@dataclass(frozen=True)
class AuditReport:
    hole: HoleEmbedding
    results: tuple[ClaimResult, ...]
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[ClaimResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, claim: str) -> ClaimResult:
        for r in self.results:
            if r.claim == claim:
                return r
        raise KeyError(claim)


class AuditFailure(StructureError):
    def __init__(self, report: AuditReport):
        self.report = report
        failed = ", ".join(f"({r.claim}) {r.detail}" for r in report.failures())
        super().__init__(f"audit failed: {failed}")


class ClaimChecker:
    """Accumulates the first counterexample per claim id."""

    def __init__(self, G: Graph):
        self.G = G
        self._order: list[str] = []
        self._desc: dict[str, str] = {}
        self._fail: dict[str, tuple[tuple[int, ...], str]] = {}

    def claim(self, cid: str, description: str) -> None:
        if cid not in self._desc:
            self._order.append(cid)
            self._desc[cid] = description

    def fail(self, cid: str, witness: tuple[int, ...], detail: str) -> None:
        self._fail.setdefault(cid, (witness, detail))

    def clique(self, cid: str, name: str, s: int) -> None:
        bad = nonadjacent_pair(self.G, s)
        if bad:
            self.fail(cid, bad, f"{name} is not a clique")

    def relation(self, cid: str, a_name: str, a: int, b_name: str, b: int, want: UniformStatus) -> None:
        """Check a join (or co-join) between the vertex masks a and b."""
        for x in members(a):
            if want is UniformStatus.JOIN:
                bad = b & ~self.G.adj[x]
            else:
                bad = b & self.G.adj[x]
            if bad:
                y = members(bad)[0]
                rel = "non-adjacent" if want is UniformStatus.JOIN else "adjacent"
                self.fail(cid, (x, y), f"{a_name} vs {b_name}: {x},{y} {rel}")
                return

    def empty_if(self, cid: str, a_name: str, a: int, b_name: str, b: int) -> None:
        """Nonempty a forces empty b."""
        if a and b:
            x, y = members(a)[0], members(b)[0]
            self.fail(cid, (x, y), f"{a_name} and {b_name} both nonempty")

    def report(self, hole: HoleEmbedding, notes: Sequence[str] = ()) -> AuditReport:
        results = []
        for cid in self._order:
            if cid in self._fail:
                w, d = self._fail[cid]
                results.append(ClaimResult(cid, self._desc[cid], False, w, d))
            else:
                results.append(ClaimResult(cid, self._desc[cid], True))
        return AuditReport(hole, tuple(results), tuple(notes))


@dataclass(frozen=True)
class NearUniformPartition:
    """Clique partition with a join/co-join status for every pair of parts.

    ``join_matrix`` maps index pairs ``(a, b)`` with ``a < b`` to JOIN or
    COJOIN; the single ``nonuniform_pair``, if any, is left out of it.
    """

    sets: tuple[frozenset[int], ...]
    names: tuple[str, ...]
    join_matrix: dict[tuple[int, int], UniformStatus] = field(hash=False)
    nonuniform_pair: tuple[int, int] | None = None

    @property
    def k(self) -> int:
        return len(self.sets)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.sets)

    @property
    def uniform(self) -> bool:
        return self.nonuniform_pair is None

    def problems(self, G: Graph) -> list[str]:
        out = []
        seen = 0
        for name, s in zip(self.names, self.sets):
            m = mask_of(s)
            if not s:
                out.append(f"{name} is empty")
            if m & seen:
                out.append(f"{name} overlaps an earlier set")
            seen |= m
            if not is_clique_mask(G, m):
                out.append(f"{name} is not a clique")
        for a in range(self.k):
            for b in range(a + 1, self.k):
                if not self.sets[a] or not self.sets[b]:
                    continue
                actual = joined_status(G, mask_of(self.sets[a]), mask_of(self.sets[b]))
                if (a, b) == self.nonuniform_pair:
                    continue
                want = self.join_matrix.get((a, b))
                if want is not actual:
                    out.append(f"{self.names[a]}/{self.names[b]}: recorded {want}, actual {actual.value}")
        return out

    def is_valid(self, G: Graph) -> bool:
        return not self.problems(G)


def near_uniform_from_sets(G: Graph, sets, names) -> NearUniformPartition:
    """Measure every pair; at most one MIXED pair is tolerated."""
    sets = tuple(frozenset(s) for s in sets)
    matrix = {}
    mixed = []
    for a in range(len(sets)):
        for b in range(a + 1, len(sets)):
            st = joined_status(G, mask_of(sets[a]), mask_of(sets[b]))
            if st is UniformStatus.MIXED:
                mixed.append((a, b))
            else:
                matrix[(a, b)] = st
    if len(mixed) > 1:
        pairs = ", ".join(f"{names[a]}/{names[b]}" for a, b in mixed)
        raise StructureError(f"more than one non-uniform pair: {pairs}")
    return NearUniformPartition(sets, tuple(names), matrix, mixed[0] if mixed else None)
