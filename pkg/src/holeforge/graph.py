"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency.

Vertex sets are passed around as plain iterables of ints (usually
frozensets); internally the hot loops work on int bitmasks where bit ``v``
stands for vertex ``v``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class GraphError(ValueError):
    pass


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Vertices of a bitmask in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class UniformStatus(enum.Enum):
    JOIN = "join"
    COJOIN = "cojoin"
    MIXED = "mixed"


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in members(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def _check_range(G: Graph, S: Iterable[int]) -> list[int]:
    S = sorted(set(S))
    for v in S:
        if not 0 <= v < G.n:
            raise GraphError(f"vertex {v} out of range for n={G.n}")
    return S


class Subgraph(NamedTuple):
    graph: Graph
    vertices: tuple[int, ...]  # vertices[i] is the parent id of local vertex i


def induced_subgraph(G: Graph, S: Iterable[int]) -> Subgraph:
    """G[S] relabelled to 0..|S|-1 in increasing parent-id order."""
    order = _check_range(G, S)
    local = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        a = 0
        for u in members(G.adj[v] & mask_of(order)):
            a |= 1 << local[u]
        adj.append(a)
    return Subgraph(Graph(len(order), tuple(adj)), tuple(order))


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union of G and H plus all edges between them; H is shifted by G.n."""
    edges = list(G.edges()) + [(u + G.n, v + G.n) for u, v in H.edges()]
    edges += [(u, G.n + v) for u in range(G.n) for v in range(H.n)]
    return make_graph(G.n + H.n, edges)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    edges = list(G.edges()) + [(u + G.n, v + G.n) for u, v in H.edges()]
    return make_graph(G.n + H.n, edges)


def is_clique_mask(G: Graph, mask: int) -> bool:
    rest = mask
    while rest:
        v = lowest(rest)
        rest &= rest - 1
        if rest & ~G.adj[v]:
            return False
    return True


def is_clique(G: Graph, S: Iterable[int]) -> bool:
    return is_clique_mask(G, mask_of(_check_range(G, S)))


def nonadjacent_pair(G: Graph, mask: int) -> tuple[int, int] | None:
    """First (u, v), u < v, inside ``mask`` with uv not an edge."""
    rest = mask
    while rest:
        v = lowest(rest)
        rest &= rest - 1
        bad = rest & ~G.adj[v]
        if bad:
            return (v, lowest(bad))
    return None


def are_joined(G: Graph, A: Iterable[int], B: Iterable[int]) -> UniformStatus:
    A = _check_range(G, A)
    B = _check_range(G, B)
    if not A or not B:
        raise GraphError("are_joined needs nonempty sets")
    if set(A) & set(B):
        raise GraphError("are_joined needs disjoint sets")
    return joined_status(G, mask_of(A), mask_of(B))


def joined_status(G: Graph, a_mask: int, b_mask: int) -> UniformStatus:
    all_in = True
    none_in = True
    for v in members(a_mask):
        hit = G.adj[v] & b_mask
        if hit != b_mask:
            all_in = False
        if hit:
            none_in = False
        if not all_in and not none_in:
            return UniformStatus.MIXED
    if all_in:
        return UniformStatus.JOIN
    return UniformStatus.COJOIN


def components(G: Graph, mask: int | None = None) -> list[int]:
    """Connected components of G[mask] as bitmasks, ordered by smallest vertex."""
    rest = G.full_mask if mask is None else mask
    comps = []
    while rest:
        seen = frontier = rest & -rest
        while frontier:
            v = lowest(frontier)
            frontier &= frontier - 1
            new = G.adj[v] & rest & ~seen
            seen |= new
            frontier |= new
        comps.append(seen)
        rest &= ~seen
    return comps


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1
