"""Seeded in-class graph sources: random growth, C7 templates, small-n
enumeration."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

from .detection import FORBIDDEN, Pattern, class_report, find_induced
from .graph import Graph, GraphError, cycle_graph, make_graph, members

DEFAULT_CAP = 16


def _violates(G: Graph, twin_free: bool) -> bool:
    pats = FORBIDDEN + ((Pattern.C5_TWIN,) if twin_free else ())
    return any(find_induced(G, p) is not None for p in pats)


def _with_vertex(G: Graph, nbrs: int) -> Graph:
    v = G.n
    adj = [a | ((nbrs >> u & 1) << v) for u, a in enumerate(G.adj)]
    adj.append(nbrs)
    return Graph(G.n + 1, tuple(adj))


def permute(G: Graph, perm: list[int]) -> Graph:
    """Relabel vertex v as perm[v]."""
    return make_graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


def grow_in_class(
    rng: random.Random,
    start: Graph,
    n: int,
    twin_free: bool = False,
    tries_per_vertex: int = 200,
) -> Graph | None:
    """Add vertices one at a time, rejecting neighbourhoods that leave the class.

    Proposals are either a random subset at a per-graph density in
    [0.4, 0.7] or a perturbed closed neighbourhood of an existing vertex
    (an exact true twin never leaves the class).
    """
    G = start
    p = rng.uniform(0.4, 0.7)
    while G.n < n:
        for _ in range(tries_per_vertex):
            if G.n and rng.random() < 0.5:
                u = rng.randrange(G.n)
                nbrs = G.adj[u] | (1 << u)
                for w in range(G.n):
                    if rng.random() < 0.15:
                        nbrs ^= 1 << w
            else:
                nbrs = 0
                for w in range(G.n):
                    if rng.random() < p:
                        nbrs |= 1 << w
            H = _with_vertex(G, nbrs)
            if not _violates(H, twin_free):
                G = H
                break
        else:
            return None
    return G


def random_in_class(
    n: int,
    seed: int,
    require: str | None = None,
    twin_free: bool = False,
    cap: int = DEFAULT_CAP,
    restarts: int = 5,
) -> Graph | None:
    """Seeded random (4K1, C4, C6)-free graph on n vertices, or None.

    ``require`` is ``"c5"`` or ``"c7"`` to plant an induced hole; with
    ``twin_free`` the result is also C5-twin-free.  Vertex ids are shuffled
    so the planted hole is not always 0..k-1.
    """
    if n > cap:
        raise GraphError(f"n={n} exceeds the generator cap {cap}")
    rng = random.Random(seed)
    hole = {None: 0, "c5": 5, "c7": 7}[require]
    if n < hole:
        return None
    start = cycle_graph(hole) if hole else Graph(0, ())
    if _violates(start, twin_free):
        return None
    for _ in range(restarts):
        G = grow_in_class(rng, start, n, twin_free)
        if G is not None:
            perm = list(range(n))
            rng.shuffle(perm)
            return permute(G, perm)
    return None


def random_extension(
    start: Graph,
    n: int,
    seed: int,
    twin_free: bool = False,
    restarts: int = 5,
) -> Graph | None:
    """Grow a fixed in-class seed graph to n vertices, ids shuffled.

    Useful to reach structures plain growth from a hole rarely hits.
    """
    if n > DEFAULT_CAP:
        raise GraphError(f"n={n} exceeds the generator cap {DEFAULT_CAP}")
    if _violates(start, twin_free):
        raise GraphError("seed graph is not in the class")
    rng = random.Random(seed)
    for _ in range(restarts):
        G = grow_in_class(rng, start, n, twin_free)
        if G is not None:
            perm = list(range(n))
            rng.shuffle(perm)
            return permute(G, perm)
    return None


def glue_on_clique(G1: Graph, G2: Graph, k: int, rng: random.Random) -> Graph | None:
    """Identify a k-clique of G1 with a k-clique of G2 (random choice).

    G1 keeps its ids; G2's non-glued vertices follow.  None when either
    graph has no k-clique.
    """
    def cliques(G: Graph) -> list[tuple[int, ...]]:
        return [c for c in itertools.combinations(range(G.n), k) if all(G.has_edge(a, b) for a, b in itertools.combinations(c, 2))]

    c1, c2 = cliques(G1), cliques(G2)
    if not c1 or not c2:
        return None
    a, b = rng.choice(c1), list(rng.choice(c2))
    rng.shuffle(b)
    ident = dict(zip(b, a))
    nxt = G1.n
    for v in range(G2.n):
        if v not in ident:
            ident[v] = nxt
            nxt += 1
    edges = list(G1.edges()) + [(ident[u], ident[v]) for u, v in G2.edges()]
    edges = {(min(u, v), max(u, v)) for u, v in edges}
    return make_graph(nxt, sorted(edges))


# --- C7 templates ---------------------------------------------------------


class InvalidTemplateSpec(ValueError):
    pass


class Unrealizable(Exception):
    def __init__(self, spec: "TemplateSpec", witness):
        self.spec = spec
        self.witness = witness
        super().__init__(f"template is outside the class: {witness.pattern.value} {witness.vertices}")


@dataclass(frozen=True)
class TemplateSpec:
    X: tuple[int, ...] = (0,) * 7
    Y: tuple[int, ...] = (0,) * 7
    Z: tuple[int, ...] = (0,) * 7
    W: int = 0
    seed: int | None = None
    density: float = 0.5

    def problems(self) -> list[str]:
        out = []
        for name in "XYZ":
            if len(getattr(self, name)) != 7 or min(getattr(self, name)) < 0:
                out.append(f"{name} needs seven nonnegative sizes")
        if out:
            return out
        Y, Z = self.Y, self.Z
        for i in range(7):
            if Y[i]:
                for d in (1, 2, 5, 6):
                    if Y[(i + d) % 7]:
                        out.append(f"Y{i + 1} and Y{(i + d) % 7 + 1} both nonempty")
                if Y[(i + 3) % 7] and Y[(i + 4) % 7]:
                    out.append(f"Y{i + 1}, Y{(i + 3) % 7 + 1} and Y{(i + 4) % 7 + 1} all nonempty")
                for d in (5, 6):
                    if Z[(i + d) % 7]:
                        out.append(f"Y{i + 1} and Z{(i + d) % 7 + 1} both nonempty")
            if Z[i]:
                for d in (2, 5):
                    if Z[(i + d) % 7]:
                        out.append(f"Z{i + 1} and Z{(i + d) % 7 + 1} both nonempty")
        return sorted(set(out))

    @classmethod
    def random(cls, seed: int, density: float = 0.3, max_size: int = 2, max_total: int = 9) -> TemplateSpec:
        """Draw sizes set by set in random order, skipping forbidden combinations."""
        rng = random.Random(seed)
        sizes = {k: [0] * 7 for k in "XYZ"}
        W = 0
        slots = [(k, i) for k in "XYZ" for i in range(7)] + [("W", 0)]
        rng.shuffle(slots)
        total = 0
        for kind, i in slots:
            if rng.random() >= density or total >= max_total:
                continue
            size = rng.randint(1, min(max_size, max_total - total))
            if kind == "W":
                trial = cls(tuple(sizes["X"]), tuple(sizes["Y"]), tuple(sizes["Z"]), size)
            else:
                sizes[kind][i] = size
                trial = cls(tuple(sizes["X"]), tuple(sizes["Y"]), tuple(sizes["Z"]), W)
            if trial.problems():
                if kind != "W":
                    sizes[kind][i] = 0
                continue
            if kind == "W":
                W = size
            total += size
        return cls(tuple(sizes["X"]), tuple(sizes["Y"]), tuple(sizes["Z"]), W, seed, density)


def _c7_relation(a: tuple[str, int], b: tuple[str, int]) -> bool | None:
    """Forced adjacency between members of two C7 sets (None: no claim)."""
    ka, i = a
    kb, j = b
    if a == b:
        return True
    order = "XYZW"
    if order.index(ka) > order.index(kb):
        return _c7_relation(b, a)
    d = (j - i) % 7
    if kb == "W":
        return True  # X, Y, Z are all joined to W
    table = {
        ("X", "X"): {1: True, 6: True, 2: False, 3: False, 4: False, 5: False},
        ("X", "Y"): {0: True, 1: True, 4: True, 2: False, 3: False, 5: False, 6: False},
        ("X", "Z"): {0: True, 1: True, 4: True, 5: True, 6: True, 2: False, 3: False},
        ("Y", "Y"): {3: True, 4: True},
        ("Y", "Z"): {0: True, 1: True, 3: True, 4: True, 2: False},
        ("Z", "Z"): {1: True, 3: True, 4: True, 6: True},
    }
    if (ka, kb) in table:
        return table[(ka, kb)].get(d)
    # (Y, X) etc. cannot occur after the ordering swap
    return None


C7_TRACE = {
    "X": lambda i: (i, i + 1, i + 2),
    "Y": lambda i: (i, i + 1, i + 4),
    "Z": lambda i: tuple(range(i, i + 5)),
    "W": lambda i: tuple(range(7)),
}


def c7_template(spec: TemplateSpec) -> Graph:
    """C7 on 0..6 plus the requested sets (X1..X7, Y1.., Z1.., W in order),
    with every forced join and co-join applied."""
    problems = spec.problems()
    if problems:
        raise InvalidTemplateSpec("; ".join(problems))
    rng = random.Random(spec.seed)
    tags: list[tuple[str, int]] = []
    for kind in "XYZ":
        for i, size in enumerate(getattr(spec, kind)):
            tags += [(kind, i)] * size
    tags += [("W", 0)] * spec.W
    n = 7 + len(tags)
    edges = [(i, (i + 1) % 7) for i in range(7)]
    for idx, (kind, i) in enumerate(tags):
        v = 7 + idx
        edges += [(v, p % 7) for p in C7_TRACE[kind](i)]
        for jdx in range(idx):
            rel = _c7_relation(tags[jdx], (kind, i))
            if rel is None:
                rel = rng.random() < spec.density
            if rel:
                edges.append((7 + jdx, v))
    G = make_graph(n, edges)
    w = class_report(G).forbidden_witness()
    if w is not None:
        raise Unrealizable(spec, w)
    return G


def template_sets(spec: TemplateSpec) -> dict[str, frozenset[int]]:
    """Vertex ids c7_template assigns to each nonempty set (1-based names)."""
    out = {}
    v = 7
    for kind in "XYZ":
        for i, size in enumerate(getattr(spec, kind)):
            if size:
                out[f"{kind}{i + 1}"] = frozenset(range(v, v + size))
            v += size
    if spec.W:
        out["W"] = frozenset(range(v, v + spec.W))
    return out


# --- exhaustive small graphs ----------------------------------------------

ENUMERATE_MAX = 7


def _refined_cells(G: Graph) -> list[list[int]]:
    color = [G.degree(v) for v in range(G.n)]
    while True:
        sig = [(color[v], tuple(sorted(color[u] for u in members(G.adj[v])))) for v in range(G.n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(color)):
            color = new
            break
        color = new
    cells: dict[int, list[int]] = {}
    for v in range(G.n):
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_form(G: Graph) -> tuple[int, ...]:
    """Lexicographically largest adjacency code over cell-respecting orders.

    Cells come from colour refinement, which is isomorphism-invariant, so
    isomorphic graphs get equal codes.  Exhaustive within cells; small n only.
    """
    cells = _refined_cells(G)
    best = None
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for part in parts for v in part]
        code = tuple(
            int(G.has_edge(order[a], order[b])) for a in range(G.n) for b in range(a + 1, G.n)
        )
        if best is None or code > best:
            best = code
    return (G.n,) + (best or ())


def from_canonical(code: tuple[int, ...]) -> Graph:
    n, bits = code[0], code[1:]
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    return make_graph(n, [p for p, bit in zip(pairs, bits) if bit])


def enumerate_small(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All in-class graphs on n <= 7 vertices.

    Labelled graphs by default (each labelled graph exactly once); with
    ``dedup`` one canonical representative per isomorphism class.  Both
    grow hereditarily from n-1 since the class is closed under deletion.
    """
    if not 0 <= n <= ENUMERATE_MAX:
        raise GraphError(f"enumeration supports 0 <= n <= {ENUMERATE_MAX}, got {n}")
    if dedup:
        yield from (from_canonical(c) for c in _canonical_layer(n))
        return
    layer = [Graph(0, ())]
    for size in range(1, n + 1):
        nxt = []
        for G in layer:
            for nbrs in range(1 << (size - 1)):
                H = _with_vertex(G, nbrs)
                if not _violates(H, False):
                    nxt.append(H)
        layer = nxt
    yield from layer


def _canonical_layer(n: int) -> list[tuple[int, ...]]:
    layer = {canonical_form(Graph(0, ()))}
    for size in range(1, n + 1):
        nxt = set()
        for code in sorted(layer):
            G = from_canonical(code)
            for nbrs in range(1 << (size - 1)):
                H = _with_vertex(G, nbrs)
                if not _violates(H, False):
                    nxt.add(canonical_form(H))
        layer = nxt
    return sorted(layer)
