"""Clique cutset decomposition and colouring merge.

Candidate separators come from a minimal triangulation computed by MCS-M:
every clique minimal separator of G is a minimal separator of any minimal
triangulation H, and those are among the sets ``madj_H(v)`` of higher
neighbours along the elimination order.  Each candidate is re-checked on G
(clique, and G - S disconnected), so a returned cutset is always genuine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from .graph import Graph, components, induced_subgraph, is_clique_mask, mask_of, members


@dataclass(frozen=True)
class Coloring:
    colors: dict[int, int] = field(hash=False)

    @property
    def count(self) -> int:
        return len(set(self.colors.values()))

    def is_proper(self, G: Graph) -> bool:
        for v in range(G.n):
            if v not in self.colors:
                return False
        return all(self.colors[u] != self.colors[v] for u, v in G.edges())

    def normalized(self) -> Coloring:
        """Same classes, colours renumbered 0..count-1 in increasing order."""
        rank = {c: i for i, c in enumerate(sorted(set(self.colors.values())))}
        return Coloring({v: rank[c] for v, c in self.colors.items()})

    def restricted(self, vertices) -> Coloring:
        return Coloring({v: self.colors[v] for v in vertices})

    def relabelled(self, vertices) -> Coloring:
        """Map local vertex i to vertices[i]."""
        return Coloring({vertices[v]: c for v, c in self.colors.items()})


def mcs_m(G: Graph) -> tuple[list[int], tuple[int, ...]]:
    """Minimal elimination ordering and the adjacency of its triangulation.

    Returns ``(order, h_adj)`` with ``order[0]`` eliminated first.  Ties in
    weight go to the smallest vertex id.
    """
    n = G.n
    weight = [0] * n
    h_adj = list(G.adj)
    unnumbered = G.full_mask
    numbered_rev = []
    for _ in range(n):
        z = max(members(unnumbered), key=lambda v: (weight[v], -v))
        unnumbered &= ~(1 << z)
        bump = 0
        for w in sorted({weight[y] for y in members(unnumbered)}):
            allowed = mask_of(y for y in members(unnumbered) if weight[y] < w)
            seen = frontier = G.adj[z] & allowed
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = G.adj[v] & allowed & ~seen
                seen |= new
                frontier |= new
            reach = G.adj[z]
            for v in members(seen):
                reach |= G.adj[v]
            for y in members(unnumbered):
                if weight[y] == w and reach >> y & 1:
                    bump |= 1 << y
        for y in members(bump):
            weight[y] += 1
            h_adj[z] |= 1 << y
            h_adj[y] |= 1 << z
        numbered_rev.append(z)
    return numbered_rev[::-1], tuple(h_adj)


def _split(G: Graph, S: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    comp = components(G, G.full_mask & ~S)[0]
    return frozenset(members(S)), frozenset(members(S | comp)), frozenset(members(G.full_mask & ~comp))


def find_clique_cutset(G: Graph) -> tuple[frozenset[int], frozenset[int], frozenset[int]] | None:
    """A clique cutset ``(C, V1, V2)`` of G, or None when G is an atom.

    ``V1`` is C plus the component of G - C holding the smallest vertex,
    ``V2`` is everything else plus C.  A disconnected G yields the empty
    cutset.
    """
    if G.n < 2:
        return None
    if len(components(G)) > 1:
        return _split(G, 0)
    order, h_adj = mcs_m(G)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        S = mask_of(u for u in members(h_adj[v]) if pos[u] > pos[v])
        if not S or not is_clique_mask(G, S):
            continue
        if len(components(G, G.full_mask & ~S)) > 1:
            return _split(G, S)
    return None


@dataclass(frozen=True)
class Atom:
    vertices: frozenset[int]


@dataclass(frozen=True)
class Split:
    cutset: frozenset[int]
    left: "Node"
    right: "Node"
    vertices: frozenset[int]


Node = Union[Atom, Split]


@dataclass(frozen=True)
class DecompTree:
    graph: Graph
    root: Node

    def atoms(self) -> list[frozenset[int]]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, Atom):
                out.append(node.vertices)
            else:
                stack += [node.right, node.left]
        return out

    def splits(self) -> list[Split]:
        out = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, Split):
                out.append(node)
                stack += [node.right, node.left]
        return out

    def problems(self) -> list[str]:
        G = self.graph
        out = []
        for s in self.splits():
            C = mask_of(s.cutset)
            a = mask_of(s.left.vertices) & ~C
            b = mask_of(s.right.vertices) & ~C
            if not is_clique_mask(G, C):
                out.append(f"cutset {sorted(s.cutset)} is not a clique")
            if s.left.vertices | s.right.vertices != s.vertices or s.left.vertices & s.right.vertices != s.cutset:
                out.append(f"split at {sorted(s.cutset)} does not cover its vertices")
            if not a or not b or any(G.adj[v] & b for v in members(a)):
                out.append(f"cutset {sorted(s.cutset)} does not separate")
        for atom in self.atoms():
            sub = induced_subgraph(G, atom).graph
            if find_clique_cutset(sub) is not None:
                out.append(f"leaf {sorted(atom)} has a clique cutset")
        return out


def decompose(G: Graph) -> DecompTree:
    """Clique cutset decomposition along a minimal elimination ordering.

    Only vertices v whose later triangulation neighbours C = madj(v) form a
    minimal separator of the triangulation are considered; these are the
    places where |madj| fails to grow in the numbering order.  When C is a
    clique of G, the part B + C (B the component of what is left of G - C
    holding v) is split off as an atom and B is deleted.  Every split
    removes v, so a connected graph yields at most n - 1 atoms.  The tree is
    a right-leaning chain.
    """
    order, h_adj = mcs_m(G)
    pos = {v: i for i, v in enumerate(order)}
    madj = [mask_of(u for u in members(h_adj[v]) if pos[u] > pos[v]) for v in range(G.n)]
    rest = G.full_mask
    pieces = []  # (cutset, atom, vertices before the split) as masks
    for i, v in enumerate(order[:-1]):
        nxt = order[i + 1]
        if madj[v].bit_count() > madj[nxt].bit_count():
            continue
        C = madj[v]
        assert not C & ~rest, "separator reaches a deleted vertex"
        if not is_clique_mask(G, C):
            continue
        B = next(c for c in components(G, rest & ~C) if c >> v & 1)
        if rest & ~(B | C):
            pieces.append((C, B | C, rest))
            rest &= ~B
    node: Node = Atom(frozenset(members(rest)))
    for C, atom, before in reversed(pieces):
        node = Split(frozenset(members(C)), Atom(frozenset(members(atom))), node, frozenset(members(before)))
    return DecompTree(G, node)


class ImproperInput(ValueError):
    pass


def merge_colorings(T: DecompTree, atom_colorings: Mapping[frozenset[int], Coloring]) -> Coloring:
    """Glue per-atom colourings along the tree.

    At each split the right child's colours are permuted to agree with the
    left child on the cutset clique, so the result uses as many colours as
    the worst atom.
    """
    G = T.graph
    for atom in T.atoms():
        c = atom_colorings.get(atom)
        if c is None:
            raise ImproperInput(f"no colouring for atom {sorted(atom)}")
        sub, ids = induced_subgraph(G, atom)
        local = Coloring({i: c.colors.get(v) for i, v in enumerate(ids)})
        if set(c.colors) != set(atom) or not local.is_proper(sub):
            raise ImproperInput(f"colouring of atom {sorted(atom)} is not proper")

    def merge(node: Node) -> Coloring:
        if isinstance(node, Atom):
            return atom_colorings[node.vertices].normalized()
        left, right = merge(node.left), merge(node.right)
        perm = {right.colors[v]: left.colors[v] for v in node.cutset}
        free = iter(c for c in range(G.n + 1) if c not in perm.values())
        for c in sorted(set(right.colors.values())):
            if c not in perm:
                perm[c] = next(free)
        colors = dict(left.colors)
        for v, c in right.colors.items():
            colors[v] = perm[c]
        return Coloring(colors)

    return merge(T.root)
