"""Neighbourhood partition around an induced C7 and its audit.

Hole positions are 0-based: ``X[i]`` holds the 3-vertices seeing positions
``i, i+1, i+2`` (mod 7), ``Y[i]`` those seeing ``i, i+1, i+4``, ``Z[i]``
the 5-vertices seeing ``i..i+4`` and ``W`` the 7-vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .detection import Pattern, find_induced, iter_induced
from .graph import Graph, UniformStatus, mask_of, members
from .structure import (
    AuditFailure,
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
    return mask_of(p % 7 for p in ps)


TRACES: dict[int, tuple[str, int]] = {}
for _i in range(7):
    TRACES[_positions(_i, _i + 1, _i + 2)] = ("X", _i)
    TRACES[_positions(_i, _i + 1, _i + 4)] = ("Y", _i)
    TRACES[_positions(*range(_i, _i + 5))] = ("Z", _i)
TRACES[(1 << 7) - 1] = ("W", 0)


@dataclass(frozen=True)
class C7Partition:
    hole: HoleEmbedding
    X: tuple[frozenset[int], ...]
    Y: tuple[frozenset[int], ...]
    Z: tuple[frozenset[int], ...]
    W: frozenset[int]

    def named_sets(self) -> list[tuple[str, frozenset[int]]]:
        """Every set with a 1-based display name (X1..X7, Y1.., Z1.., W)."""
        out = []
        for kind in "XYZ":
            for i, s in enumerate(getattr(self, kind)):
                out.append((f"{kind}{i + 1}", s))
        out.append(("W", self.W))
        return out

    def set_of(self, v: int) -> str | None:
        for name, s in self.named_sets():
            if v in s:
                return name
        return None


def c7_embeddings(G: Graph):
    for e in iter_induced(G, Pattern.C7):
        yield HoleEmbedding.from_embedding(e)


def find_c7(G: Graph, index: int = 0) -> HoleEmbedding | None:
    for k, h in enumerate(c7_embeddings(G)):
        if k == index:
            return h
    return None


def build_c7_partition(G: Graph, H: HoleEmbedding) -> C7Partition:
    if H.length != 7 or not H.verify(G):
        raise StructureError(f"{H.vertices} is not an induced C7")
    sets = {k: [set() for _ in range(7)] for k in "XYZ"}
    W = set()
    for v in members(G.full_mask & ~H.mask):
        t = H.trace(G, v)
        hit = TRACES.get(t)
        if hit is None:
            trace = tuple(i for i in range(7) if t >> i & 1)
            raise UnclassifiableVertex(v, trace, local_forbidden_witness(G, H, v))
        kind, i = hit
        if kind == "W":
            W.add(v)
        else:
            sets[kind][i].add(v)
    freeze = lambda ss: tuple(frozenset(s) for s in ss)
    return C7Partition(H, freeze(sets["X"]), freeze(sets["Y"]), freeze(sets["Z"]), frozenset(W))


def audit_c7(G: Graph, P: C7Partition) -> AuditReport:
    """Check the adjacency claims (a)-(o) between the parts of ``P``.

    Claim (i) checks only that a nonempty Y_i forces Y_{i+1}, Y_{i+2},
    Y_{i+5}, Y_{i+6} empty and that Y_{i+3}, Y_{i+4} are not both nonempty.
    Whether one of Y_{i+3}, Y_{i+4} must be nonempty is recorded as a note.
    """
    X = [mask_of(s) for s in P.X]
    Y = [mask_of(s) for s in P.Y]
    Z = [mask_of(s) for s in P.Z]
    W = mask_of(P.W)
    c = ClaimChecker(G)
    n = lambda kind, i: f"{kind}{i % 7 + 1}"

    c.claim("a", "every set is a clique")
    for kind, arr in (("X", X), ("Y", Y), ("Z", Z)):
        for i in range(7):
            c.clique("a", n(kind, i), arr[i])
    c.clique("a", "W", W)

    sets = {"X": X, "Y": Y, "Z": Z}
    pair_claims = [
        ("b", "X_i join X_{i+1}, X_{i+6}", "X", "X", (1, 6), J),
        ("c", "X_i cojoin X_{i+2..i+5}", "X", "X", (2, 3, 4, 5), CJ),
        ("d", "X_i join Y_i, Y_{i+1}, Y_{i+4}", "X", "Y", (0, 1, 4), J),
        ("e", "X_i cojoin Y_{i+2}, Y_{i+3}, Y_{i+5}, Y_{i+6}", "X", "Y", (2, 3, 5, 6), CJ),
        ("f", "X_i join Z_i, Z_{i+1}, Z_{i+4}, Z_{i+5}, Z_{i+6}", "X", "Z", (0, 1, 4, 5, 6), J),
        ("g", "X_i cojoin Z_{i+2}, Z_{i+3}", "X", "Z", (2, 3), CJ),
    ]
    for cid, desc, a, b, offsets, want in pair_claims:
        c.claim(cid, desc)
        for i in range(7):
            for d in offsets:
                c.relation(cid, n(a, i), sets[a][i], n(b, i + d), sets[b][(i + d) % 7], want)

    c.claim("h", "X_i join W")
    for i in range(7):
        c.relation("h", n("X", i), X[i], "W", W, J)

    c.claim("i", "Y_i nonempty forces Y_{i+1}, Y_{i+2}, Y_{i+5}, Y_{i+6} empty and not both Y_{i+3}, Y_{i+4}")
    notes = []
    for i in range(7):
        if not Y[i]:
            continue
        for d in (1, 2, 5, 6):
            c.empty_if("i", n("Y", i), Y[i], n("Y", i + d), Y[(i + d) % 7])
        if Y[(i + 3) % 7] and Y[(i + 4) % 7]:
            w = (members(Y[i])[0], members(Y[(i + 3) % 7])[0], members(Y[(i + 4) % 7])[0])
            c.fail("i", w, f"{n('Y', i + 3)} and {n('Y', i + 4)} both nonempty")
        if not Y[(i + 3) % 7] and not Y[(i + 4) % 7]:
            notes.append(f"{n('Y', i)} nonempty while {n('Y', i + 3)} and {n('Y', i + 4)} are both empty")
    if sum(1 for y in Y if y) > 2:
        c.fail("i", tuple(members(y)[0] for y in Y if y), "more than two Y sets nonempty")

    c.claim("j", "Y_i join Y_{i+3} and Y_{i+4}")
    for i in range(7):
        for d in (3, 4):
            c.relation("j", n("Y", i), Y[i], n("Y", i + d), Y[(i + d) % 7], J)

    c.claim("k", "Y_i nonempty forces Z_{i+5}, Z_{i+6} empty")
    for i in range(7):
        for d in (5, 6):
            c.empty_if("k", n("Y", i), Y[i], n("Z", i + d), Z[(i + d) % 7])

    c.claim("l", "Y_i join W, Z_i, Z_{i+1}, Z_{i+3}, Z_{i+4}")
    for i in range(7):
        c.relation("l", n("Y", i), Y[i], "W", W, J)
        for d in (0, 1, 3, 4):
            c.relation("l", n("Y", i), Y[i], n("Z", i + d), Z[(i + d) % 7], J)

    c.claim("m", "Y_i cojoin Z_{i+2}")
    for i in range(7):
        c.relation("m", n("Y", i), Y[i], n("Z", i + 2), Z[(i + 2) % 7], CJ)

    c.claim("n", "Z_i nonempty forces Z_{i+2}, Z_{i+5} empty; at most three Z sets nonempty")
    for i in range(7):
        for d in (2, 5):
            c.empty_if("n", n("Z", i), Z[i], n("Z", i + d), Z[(i + d) % 7])
    if sum(1 for z in Z if z) > 3:
        c.fail("n", tuple(members(z)[0] for z in Z if z), "more than three Z sets nonempty")

    c.claim("o", "Z_i join W, Z_{i+1}, Z_{i+3}, Z_{i+4}, Z_{i+6}")
    for i in range(7):
        c.relation("o", n("Z", i), Z[i], "W", W, J)
        for d in (1, 3, 4, 6):
            c.relation("o", n("Z", i), Z[i], n("Z", i + d), Z[(i + d) % 7], J)

    return c.report(P.hole, notes)


def c7_uniform_sets(G: Graph, H: HoleEmbedding | None = None, include_hole: bool = True) -> NearUniformPartition:
    """Uniform clique partition of G (or of G minus the hole).

    With ``include_hole`` the seven hole vertices come first as singleton
    parts, followed by the nonempty X, Y, Z sets and W.
    """
    if H is None:
        e = find_induced(G, Pattern.C7)
        if e is None:
            raise StructureError("graph has no induced C7")
        H = HoleEmbedding.from_embedding(e)
    P = build_c7_partition(G, H)
    report = audit_c7(G, P)
    if not report.ok:
        raise AuditFailure(report)
    sets, names = [], []
    if include_hole:
        for i, h in enumerate(H.vertices):
            sets.append({h})
            names.append(f"h{i + 1}")
    for name, s in P.named_sets():
        if s:
            sets.append(s)
            names.append(name)
    part = near_uniform_from_sets(G, sets, names)
    if not part.uniform:
        a, b = part.nonuniform_pair
        raise StructureError(f"non-uniform pair {names[a]}/{names[b]} in an audited C7 partition")
    return part
