"""Clique-width expressions: construction, evaluation, width, text form.

An expression is a tree of :class:`Create`, :class:`Union`, :class:`Join`
and :class:`Relabel` nodes.  ``width`` counts every distinct label that
appears anywhere in the tree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Union as _U

from .graph import Graph, UniformStatus, is_clique_mask, make_graph, mask_of, members
from .structure import NearUniformPartition


class ExpressionError(ValueError):
    pass


@dataclass(frozen=True)
class Create:
    vertex: int
    label: int


@dataclass(frozen=True)
class Union:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Join:
    i: int
    j: int
    child: "Expr"


@dataclass(frozen=True)
class Relabel:
    src: int
    dst: int
    child: "Expr"


Expr = _U[Create, Union, Join, Relabel]


@dataclass(frozen=True)
class LabeledGraph:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    labels: dict[int, int]

    def as_graph(self, n: int | None = None) -> Graph:
        if n is None:
            n = max(self.vertices, default=-1) + 1
        return make_graph(n, self.edges)

    def equals(self, G: Graph, vertices: Iterable[int] | None = None) -> bool:
        """Literal equality with G[vertices] (all of G by default)."""
        want = frozenset(range(G.n) if vertices is None else vertices)
        if self.vertices != want:
            return False
        m = mask_of(want)
        edges = {(u, v) for u in want for v in members(G.adj[u] & m) if u < v}
        return self.edges == edges


def _postorder(E: Expr) -> Iterator[Expr]:
    stack: list[tuple[Expr, bool]] = [(E, False)]
    while stack:
        node, done = stack.pop()
        if done or isinstance(node, Create):
            yield node
            continue
        stack.append((node, True))
        if isinstance(node, Union):
            stack.append((node.right, False))
            stack.append((node.left, False))
        else:
            stack.append((node.child, False))


def evaluate(E: Expr) -> LabeledGraph:
    stack: list[tuple[dict[int, int], set[tuple[int, int]]]] = []
    for node in _postorder(E):
        if isinstance(node, Create):
            stack.append(({node.vertex: node.label}, set()))
        elif isinstance(node, Union):
            lab2, e2 = stack.pop()
            lab1, e1 = stack.pop()
            dup = lab1.keys() & lab2.keys()
            if dup:
                raise ExpressionError(f"vertex {min(dup)} created twice")
            lab1.update(lab2)
            e1 |= e2
            stack.append((lab1, e1))
        elif isinstance(node, Join):
            if node.i == node.j:
                raise ExpressionError(f"join with equal labels {node.i}")
            lab, edges = stack[-1]
            a = [v for v, l in lab.items() if l == node.i]
            b = [v for v, l in lab.items() if l == node.j]
            for u in a:
                for v in b:
                    edges.add((min(u, v), max(u, v)))
        else:
            lab, _ = stack[-1]
            for v, l in lab.items():
                if l == node.src:
                    lab[v] = node.dst
    (lab, edges), = stack
    return LabeledGraph(frozenset(lab), frozenset(edges), lab)


def labels_used(E: Expr) -> set[int]:
    out = set()
    for node in _postorder(E):
        if isinstance(node, Create):
            out.add(node.label)
        elif isinstance(node, Join):
            out |= {node.i, node.j}
        elif isinstance(node, Relabel):
            out |= {node.src, node.dst}
    return out


def width(E: Expr) -> int:
    return len(labels_used(E))


def union_all(parts: list[Expr]) -> Expr:
    if not parts:
        raise ExpressionError("nothing to union")
    out = parts[0]
    for p in parts[1:]:
        out = Union(out, p)
    return out


# --- chain structure between two cliques ---------------------------------


class C4Witness(ExpressionError):
    """Crossing cross-edges between two cliques: an induced C4 (a, b, b', a')."""

    def __init__(self, cycle: tuple[int, int, int, int]):
        self.cycle = cycle
        super().__init__(f"induced C4 {cycle}")


def chain_order(G: Graph, A: Iterable[int], B: Iterable[int]) -> list[int]:
    """Order A so that neighbourhoods into B grow by inclusion.

    Ties go to the smaller vertex id.  Raises :class:`C4Witness` when two
    members of A have incomparable neighbourhoods in B.
    """
    A, B = sorted(set(A)), sorted(set(B))
    a_mask, b_mask = mask_of(A), mask_of(B)
    if a_mask & b_mask:
        raise ExpressionError("chain_order needs disjoint sets")
    if not is_clique_mask(G, a_mask) or not is_clique_mask(G, b_mask):
        raise ExpressionError("chain_order needs two cliques")
    nb = {a: G.adj[a] & b_mask for a in A}
    order = sorted(A, key=lambda a: (nb[a].bit_count(), a))
    for x, y in zip(order, order[1:]):
        if nb[x] & ~nb[y]:
            b = members(nb[x] & ~nb[y])[0]
            b2 = members(nb[y] & ~nb[x])[0]
            a, a2 = (x, y) if x < y else (y, x)
            if a == y:
                b, b2 = b2, b
            raise C4Witness((a, b, b2, a2))
    return order


# --- builders -------------------------------------------------------------


def _clique_expr(vertices: list[int], label: int, temp: int) -> Expr:
    """Build a clique: each newcomer arrives on ``temp``, joins ``label``,
    then is relabelled to ``label``."""
    expr: Expr = Create(vertices[0], label)
    for v in vertices[1:]:
        expr = Relabel(temp, label, Join(temp, label, Union(expr, Create(v, temp))))
    return expr


def _pair_expr(G: Graph, A: list[int], B: list[int], la: int, lb: int, temp: int) -> Expr:
    """G[A ∪ B] for cliques A, B whose cross edges form a chain.

    With A in chain order a_1..a_p, each b is adjacent exactly to a suffix
    a_t(b)..a_p.  Adding b's just before a_t(b) means every newcomer a must
    be joined to all b's present and every newcomer b to no a present.
    """
    order = chain_order(G, A, B)
    b_mask = mask_of(B)
    placed = 0
    sequence = []
    for a in order:
        for b in members(G.adj[a] & b_mask & ~placed):
            sequence.append((b, lb))
            placed |= 1 << b
        sequence.append((a, la))
    for b in members(b_mask & ~placed):
        sequence.append((b, lb))
    expr: Expr | None = None
    for v, lab in sequence:
        if expr is None:
            expr = Create(v, lab)
            continue
        step: Expr = Union(expr, Create(v, temp))
        if lab == la:
            step = Join(temp, lb, step)
        step = Join(temp, lab, step)
        expr = Relabel(temp, lab, step)
    return expr


def build_from_near_uniform(G: Graph, P: NearUniformPartition) -> Expr:
    """Expression for G[P.vertices] with one label per part plus one temp.

    Each part is built as a clique on its own label, the non-uniform pair
    (if any) is built together in chain order, and a final join for each
    JOIN entry of the matrix adds the cross edges between parts.
    """
    problems = P.problems(G)
    if problems:
        raise ExpressionError("invalid partition: " + "; ".join(problems))
    temp = 0
    label = {s: s + 1 for s in range(P.k)}
    pieces: list[Expr] = []
    pair = P.nonuniform_pair
    for s in range(P.k):
        if pair and s == pair[1]:
            continue
        if pair and s == pair[0]:
            a, b = pair
            pieces.append(_pair_expr(G, sorted(P.sets[a]), sorted(P.sets[b]), label[a], label[b], temp))
        else:
            pieces.append(_clique_expr(sorted(P.sets[s]), label[s], temp))
    expr = union_all(pieces)
    for (a, b), st in sorted(P.join_matrix.items()):
        if st is UniformStatus.JOIN:
            expr = Join(label[a], label[b], expr)
    return expr


def add_back_vertices(E: Expr, G: Graph, S: Iterable[int]) -> Expr:
    """Extend an expression for G - S to one for G.

    Every label is split by the vertex's neighbourhood in S, so joins and
    relabels are replayed per trace class; the S vertices then get one fresh
    label each and are joined to the trace classes that see them.
    """
    S = sorted(set(S))
    if not S:
        return E
    rest = frozenset(range(G.n)) - frozenset(S)
    got = evaluate(E)
    if not got.equals(G, rest):
        raise ExpressionError("expression does not evaluate to G - S")
    s_mask = mask_of(S)
    trace = {v: G.adj[v] & s_mask for v in rest}
    traces = sorted(set(trace.values()))
    codes: dict[tuple[int, int], int] = {}

    def code(label: int, t: int) -> int:
        if (label, t) not in codes:
            codes[(label, t)] = len(codes)
        return codes[(label, t)]

    old_labels = sorted(labels_used(E))
    for l in old_labels:
        for t in traces:
            code(l, t)

    built: list[Expr] = []
    for node in _postorder(E):
        if isinstance(node, Create):
            built.append(Create(node.vertex, code(node.label, trace[node.vertex])))
        elif isinstance(node, Union):
            r = built.pop()
            l = built.pop()
            built.append(Union(l, r))
        elif isinstance(node, Join):
            expr = built.pop()
            for t1 in traces:
                for t2 in traces:
                    expr = Join(code(node.i, t1), code(node.j, t2), expr)
            built.append(expr)
        else:
            expr = built.pop()
            for t in traces:
                expr = Relabel(code(node.src, t), code(node.dst, t), expr)
            built.append(expr)
    expr = built.pop()
    fresh = {s: len(codes) + k for k, s in enumerate(S)}
    for s in S:
        expr = Union(expr, Create(s, fresh[s]))
    for s in S:
        for (l, t) in sorted(codes):
            if t >> s & 1:
                expr = Join(fresh[s], codes[(l, t)], expr)
    for i, s in enumerate(S):
        for s2 in S[i + 1 :]:
            if G.has_edge(s, s2):
                expr = Join(fresh[s], fresh[s2], expr)
    return expr


def singleton_expression(G: Graph) -> Expr:
    """Width-n expression: one label per vertex."""
    parts = [Create(v, v) for v in range(G.n)]
    expr = union_all(parts)
    for u, v in G.edges():
        expr = Join(u, v, expr)
    return expr


# --- text form ------------------------------------------------------------


def to_text(E: Expr, one_based: bool = True) -> str:
    """Stack-machine text: ``v id label``, ``u``, ``j i j``, ``r i j``."""
    off = 1 if one_based else 0
    lines = []
    for node in _postorder(E):
        if isinstance(node, Create):
            lines.append(f"v {node.vertex + off} {node.label}")
        elif isinstance(node, Union):
            lines.append("u")
        elif isinstance(node, Join):
            lines.append(f"j {node.i} {node.j}")
        else:
            lines.append(f"r {node.src} {node.dst}")
    return "\n".join(lines) + "\n"


def from_text(text: str, one_based: bool = True) -> Expr:
    off = 1 if one_based else 0
    stack: list[Expr] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            op, args = parts[0], [int(x) for x in parts[1:]]
            if op == "v" and len(args) == 2:
                stack.append(Create(args[0] - off, args[1]))
            elif op == "u" and not args:
                r, l = stack.pop(), stack.pop()
                stack.append(Union(l, r))
            elif op == "j" and len(args) == 2:
                stack.append(Join(args[0], args[1], stack.pop()))
            elif op == "r" and len(args) == 2:
                stack.append(Relabel(args[0], args[1], stack.pop()))
            else:
                raise ExpressionError(f"line {lineno}: bad instruction {raw!r}")
        except (ValueError, IndexError) as exc:
            raise ExpressionError(f"line {lineno}: {raw!r}: {exc}") from None
    if len(stack) != 1:
        raise ExpressionError(f"expression leaves {len(stack)} items on the stack")
    return stack[0]


# --- exact width of tiny graphs -------------------------------------------


def _normalize(labels: tuple[int, ...]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(l, len(seen)) for l in labels)


def has_width_at_most(G: Graph, k: int) -> bool:
    """Exhaustive search over k-labelled partial constructions of G.

    A state is (vertex set U, edges built so far, labelling of U).  States
    that can no longer complete to G are pruned: same-labelled vertices must
    agree outside U and inside U's remaining edges, and a label pair with a
    missing G-edge between them may not hold a G-non-edge.  Only for tiny n.
    """
    n = G.n
    if n == 0:
        return True
    full = G.full_mask

    def viable(U: tuple[int, ...], edges: frozenset, labels: tuple[int, ...]) -> bool:
        if any(not G.has_edge(u, v) for u, v in edges):
            return False
        outside = full & ~mask_of(U)
        for x in range(len(U)):
            for y in range(x + 1, len(U)):
                u, v = U[x], U[y]
                e = (u, v) in edges
                g = G.has_edge(u, v)
                if labels[x] == labels[y]:
                    if G.adj[u] & outside != G.adj[v] & outside or e != g:
                        return False
        for la in set(labels):
            for lb in set(labels):
                if la >= lb:
                    continue
                xs = [U[i] for i in range(len(U)) if labels[i] == la]
                ys = [U[i] for i in range(len(U)) if labels[i] == lb]
                pairs = [(min(a, b), max(a, b)) for a in xs for b in ys]
                missing = any(G.has_edge(*p) and p not in edges for p in pairs)
                if missing and not all(G.has_edge(*p) for p in pairs):
                    return False
        return True

    def closure(states: set) -> set:
        todo = list(states)
        while todo:
            U, edges, labels = todo.pop()
            nxt = []
            ls = sorted(set(labels))
            for a in ls:
                for b in ls:
                    if a < b:
                        new = set(edges)
                        for x in range(len(U)):
                            for y in range(len(U)):
                                if labels[x] == a and labels[y] == b:
                                    new.add((min(U[x], U[y]), max(U[x], U[y])))
                        nxt.append((U, frozenset(new), labels))
                    if a != b:
                        nxt.append((U, edges, _normalize(tuple(b if l == a else l for l in labels))))
            for st in nxt:
                if st not in states and viable(*st):
                    states.add(st)
                    todo.append(st)
        return states

    by_set: dict[tuple[int, ...], set] = {}
    for size in range(1, n + 1):
        for U in itertools.combinations(range(n), size):
            states = set()
            if size == 1:
                states.add((U, frozenset(), (0,)))
            else:
                first = U[0]
                rest = U[1:]
                for r in range(0, len(rest)):
                    for left_rest in itertools.combinations(rest, r):
                        L = (first,) + left_rest
                        R = tuple(v for v in U if v not in L)
                        for l_st in by_set.get(L, ()):
                            for r_st in by_set.get(R, ()):
                                states |= _unions(l_st, r_st, k, viable)
            by_set[U] = closure(states)
    want = frozenset(G.edges())
    return any(edges == want for _, edges, _ in by_set[tuple(range(n))])


def _unions(l_st, r_st, k: int, viable) -> set:
    UL, EL, LL = l_st
    UR, ER, LR = r_st
    cl = max(LL) + 1
    cr = max(LR) + 1
    out = set()
    for assign in itertools.product(range(k), repeat=cr):
        if cl + sum(1 for a in set(assign) if a >= cl) > k:
            continue
        U = tuple(sorted(UL + UR))
        lab = dict(zip(UL, LL))
        lab.update((v, assign[l]) for v, l in zip(UR, LR))
        labels = _normalize(tuple(lab[v] for v in U))
        if max(labels) + 1 > k:
            continue
        st = (U, EL | ER, labels)
        if viable(*st):
            out.add(st)
    return out


def min_width(G: Graph, max_k: int = 4) -> int | None:
    for k in range(1, max_k + 1):
        if has_width_at_most(G, k):
            return k
    return None
