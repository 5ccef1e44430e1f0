"""Neighbourhood partition around an induced C5, its audit, and the
structure classifier for (4K1, C4, C6, C5-twin)-free graphs.

Hole positions are 0-based: ``F[i]`` are the 1-vertices seeing ``i``,
``T[i]`` the 2-vertices seeing ``i, i+1``, ``X[i]`` the 3-vertices seeing
``i, i+1, i+2`` (mod 5), ``R`` the 0-vertices and ``W`` the 5-vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .decomposition import find_clique_cutset
from .detection import FORBIDDEN, Embedding, Pattern, find_induced, iter_induced
from .graph import Graph, UniformStatus, is_clique_mask, mask_of, members
from .structure import (
    AuditReport,
    ClaimChecker,
    HoleEmbedding,
    NearUniformPartition,
    StructureError,
    UnclassifiableVertex,
    local_forbidden_witness,
    near_uniform_from_sets,
)

J, CJ = UniformStatus.JOIN, UniformStatus.COJOIN


def _positions(*ps: int) -> int:
    return mask_of(p % 5 for p in ps)


TRACES: dict[int, tuple[str, int]] = {0: ("R", 0), (1 << 5) - 1: ("W", 0)}
for _i in range(5):
    TRACES[_positions(_i)] = ("F", _i)
    TRACES[_positions(_i, _i + 1)] = ("T", _i)
    TRACES[_positions(_i, _i + 1, _i + 2)] = ("X", _i)


@dataclass(frozen=True)
class C5Partition:
    hole: HoleEmbedding
    F: tuple[frozenset[int], ...]
    T: tuple[frozenset[int], ...]
    X: tuple[frozenset[int], ...]
    R: frozenset[int]
    W: frozenset[int]

    def named_sets(self) -> list[tuple[str, frozenset[int]]]:
        out = []
        for kind in "FTX":
            for i, s in enumerate(getattr(self, kind)):
                out.append((f"{kind}{i + 1}", s))
        out += [("R", self.R), ("W", self.W)]
        return out


def c5_embeddings(G: Graph):
    for e in iter_induced(G, Pattern.C5):
        yield HoleEmbedding.from_embedding(e)


def find_c5(G: Graph, index: int = 0) -> HoleEmbedding | None:
    for k, h in enumerate(c5_embeddings(G)):
        if k == index:
            return h
    return None


def build_c5_partition(G: Graph, H: HoleEmbedding) -> C5Partition:
    if H.length != 5 or not H.verify(G):
        raise StructureError(f"{H.vertices} is not an induced C5")
    sets = {k: [set() for _ in range(5)] for k in "FTX"}
    R, W = set(), set()
    for v in members(G.full_mask & ~H.mask):
        t = H.trace(G, v)
        hit = TRACES.get(t)
        if hit is None:
            trace = tuple(i for i in range(5) if t >> i & 1)
            raise UnclassifiableVertex(v, trace, local_forbidden_witness(G, H, v))
        kind, i = hit
        if kind == "R":
            R.add(v)
        elif kind == "W":
            W.add(v)
        else:
            sets[kind][i].add(v)
    freeze = lambda ss: tuple(frozenset(s) for s in ss)
    return C5Partition(H, freeze(sets["F"]), freeze(sets["T"]), freeze(sets["X"]), frozenset(R), frozenset(W))


def audit_c5(G: Graph, P: C5Partition) -> AuditReport:
    """Check claims (a)-(i) around the C5.

    F_i against X_i, X_{i+3}, X_{i+4} may legitimately be mixed, and nothing
    is claimed about W against F, T or X, so neither is checked.
    """
    F = [mask_of(s) for s in P.F]
    T = [mask_of(s) for s in P.T]
    X = [mask_of(s) for s in P.X]
    R, W = mask_of(P.R), mask_of(P.W)
    c = ClaimChecker(G)
    n = lambda kind, i: f"{kind}{i % 5 + 1}"

    c.claim("a", "each F_i, T_i, X_i, R, W is a clique")
    for kind, arr in (("F", F), ("T", T), ("X", X)):
        for i in range(5):
            c.clique("a", n(kind, i), arr[i])
    c.clique("a", "R", R)
    c.clique("a", "W", W)

    c.claim("b", "R join F_i and T_i")
    for i in range(5):
        c.relation("b", "R", R, n("F", i), F[i], J)
        c.relation("b", "R", R, n("T", i), T[i], J)

    c.claim("c", "at most one F_i nonempty")
    for i in range(5):
        for j in range(i + 1, 5):
            c.empty_if("c", n("F", i), F[i], n("F", j), F[j])

    sets = {"F": F, "T": T, "X": X}
    pair_claims = [
        ("d", "F_i join T_i, T_{i+2}, T_{i+4}", "F", "T", (0, 2, 4), J),
        ("e", "F_i cojoin T_{i+1}, T_{i+3}", "F", "T", (1, 3), CJ),
        ("f", "F_i cojoin X_{i+1}", "F", "X", (1,), CJ),
        ("g", "T_i cojoin T_j for j != i", "T", "T", (1, 2, 3, 4), CJ),
        ("h", "T_i cojoin X_{i+2}", "T", "X", (2,), CJ),
        ("i", "X_i cojoin X_{i+2}", "X", "X", (2,), CJ),
    ]
    for cid, desc, a, b, offsets, want in pair_claims:
        c.claim(cid, desc)
        for i in range(5):
            for d in offsets:
                c.relation(cid, n(a, i), sets[a][i], n(b, i + d), sets[b][(i + d) % 5], want)
    return c.report(P.hole)


# --- structure classifier for (4K1, C4, C6, C5-twin)-free graphs ---------


class TrichotomyViolation(StructureError):
    """The input contradicts the trichotomy; carries the offending graph."""

    def __init__(self, G: Graph, reason: str):
        self.graph = G
        self.reason = reason
        super().__init__(reason)


class PreconditionViolation(StructureError):
    def __init__(self, reason: str, witness: Embedding | None = None):
        self.witness = witness
        super().__init__(reason)


@dataclass(frozen=True)
class CliqueCutset:
    cutset: frozenset[int]
    v1: frozenset[int]
    v2: frozenset[int]

    case = "i"

    def verify(self, G: Graph) -> bool:
        C = mask_of(self.cutset)
        if not is_clique_mask(G, C):
            return False
        a, b = mask_of(self.v1) & ~C, mask_of(self.v2) & ~C
        if not a or not b or a & b or (a | b | C) != G.full_mask:
            return False
        return all(not (G.adj[v] & b) for v in members(a))


@dataclass(frozen=True)
class HasC7:
    hole: HoleEmbedding

    case = "ii"

    def verify(self, G: Graph) -> bool:
        return self.hole.length == 7 and self.hole.verify(G)


@dataclass(frozen=True)
class NearUniformConstruction:
    """Case (iii): removing the hole and the single T vertex leaves the two
    cliques W and F (relative F_1), which form a near-uniform partition."""

    hole: HoleEmbedding
    removed: frozenset[int]
    partition: NearUniformPartition

    case = "iii"

    def verify(self, G: Graph) -> bool:
        rest = frozenset(range(G.n)) - self.removed
        return (
            self.hole.verify(G)
            and len(self.removed) <= 6
            and self.partition.vertices == rest
            and self.partition.is_valid(G)
        )


@dataclass(frozen=True)
class JoinCliqueC5:
    clique: frozenset[int]
    hole: HoleEmbedding

    case = "iv"

    def verify(self, G: Graph) -> bool:
        K = mask_of(self.clique)
        if not self.hole.verify(G) or not is_clique_mask(G, K):
            return False
        if K & self.hole.mask or (K | self.hole.mask) != G.full_mask:
            return False
        return all(G.adj[v] & self.hole.mask == self.hole.mask for v in members(K))


C5Outcome = Union[CliqueCutset, HasC7, NearUniformConstruction, JoinCliqueC5]


def _rotate(H: HoleEmbedding, p: int) -> HoleEmbedding:
    return HoleEmbedding(tuple(H[p + i] for i in range(5)))


def c7_from_f_and_t(P: C5Partition) -> list[HoleEmbedding]:
    """For each i with F_i, T_i and T_{i+4} all nonempty, the 7-tuple
    (t_{i+4}, f, t_i, i+1, i+2, i+3, i+4) on the smallest members.

    In a graph that passes the C5 audit every such tuple is an induced C7.
    """
    out = []
    for p in range(5):
        f_set, t1, t5 = P.F[p], P.T[p], P.T[(p + 4) % 5]
        if f_set and t1 and t5:
            q = _rotate(P.hole, p)
            out.append(HoleEmbedding((min(t5), min(f_set), min(t1), q[1], q[2], q[3], q[4])))
    return out


def classify_atom_with_c5(G: Graph, check_precondition: bool = True) -> C5Outcome:
    """Decide which case of the C5 trichotomy ``G`` falls in.

    Cases are tried in the order clique cutset, C7, join of a clique with the
    C5, near-uniform remainder.  Anything else is a counterexample and
    raises :class:`TrichotomyViolation`.
    """
    if check_precondition:
        for p in FORBIDDEN + (Pattern.C5_TWIN,):
            w = find_induced(G, p)
            if w is not None:
                raise PreconditionViolation(f"graph contains an induced {p.value}", w)
    e = find_induced(G, Pattern.C5)
    if e is None:
        raise PreconditionViolation("graph has no induced C5")

    cut = find_clique_cutset(G)
    if cut is not None:
        return CliqueCutset(*cut)
    c7 = find_induced(G, Pattern.C7)
    if c7 is not None:
        return HasC7(HoleEmbedding.from_embedding(c7))

    H = HoleEmbedding.from_embedding(e)
    P = build_c5_partition(G, H)
    if any(P.X):
        # a 3-vertex is a twin of the middle hole vertex
        raise PreconditionViolation("a 3-vertex exists, so G has a C5-twin")
    if P.R:
        raise TrichotomyViolation(G, f"R = {sorted(P.R)} is nonempty in a graph without clique cutset")
    nonempty_f = [i for i in range(5) if P.F[i]]
    if len(nonempty_f) > 1:
        raise PreconditionViolation(f"F sets {[i + 1 for i in nonempty_f]} both nonempty")

    if not nonempty_f:
        if not any(P.T):
            return JoinCliqueC5(P.W, H)
        i = next(i for i in range(5) if P.T[i])
        raise TrichotomyViolation(G, f"F empty and T{i + 1} nonempty but W + {{{i + 1},{i + 2}}} is no clique cutset")

    # rotate so the nonempty F set sits at position 0
    p = nonempty_f[0]
    rel = lambda k: P.T[(p + k) % 5]
    f_set = P.F[p]
    if rel(1) or rel(3):
        raise TrichotomyViolation(G, "T next to F is nonempty yet no clique cutset exists")
    if rel(2):
        t3 = rel(2)
        if len(t3) > 1 or rel(0) or rel(4):
            raise TrichotomyViolation(G, "T3 has two vertices or coexists with T1/T5 in a C5-twin-free graph")
        removed = frozenset(H.vertices) | t3
        sets, names = [], []
        if P.W:
            sets.append(P.W)
            names.append("W")
        sets.append(f_set)
        names.append("F1")
        part = near_uniform_from_sets(G, sets, names)
        return NearUniformConstruction(_rotate(H, p), removed, part)
    if rel(0) and rel(4):
        cand = c7_from_f_and_t(P)[0]
        if cand.verify(G):
            raise TrichotomyViolation(G, f"induced C7 {cand.vertices} missed by the C7 search")
        raise TrichotomyViolation(G, f"expected induced C7 {cand.vertices} is not induced")
    raise TrichotomyViolation(G, "F nonempty with T1 or T5 empty, yet no clique cutset exists")
