"""DIMACS .col reading/writing and JSON views of reports.

Every vertex id leaving this module is 1-based, matching the DIMACS files.
"""

from __future__ import annotations

from .c5 import C5Partition, CliqueCutset, HasC7, JoinCliqueC5, NearUniformConstruction
from .c7 import C7Partition
from .decomposition import Atom, Coloring, DecompTree, Node
from .detection import ClassReport, Embedding
from .graph import Graph, GraphError, make_graph
from .structure import AuditReport, HoleEmbedding, NearUniformPartition

SCHEMA = 1


class DimacsError(ValueError):
    pass


def parse_dimacs(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "p":
                if n is not None:
                    raise DimacsError(f"line {lineno}: second problem line")
                if len(parts) != 4 or parts[1] not in ("edge", "col"):
                    raise DimacsError(f"line {lineno}: expected 'p edge <n> <m>'")
                n, m = int(parts[2]), int(parts[3])
            elif parts[0] == "e":
                if n is None:
                    raise DimacsError(f"line {lineno}: edge before problem line")
                if len(parts) != 3:
                    raise DimacsError(f"line {lineno}: expected 'e <u> <v>'")
                u, v = int(parts[1]), int(parts[2])
                if u == v:
                    raise DimacsError(f"line {lineno}: self-loop at {u}")
                if not (1 <= u <= n and 1 <= v <= n):
                    raise DimacsError(f"line {lineno}: vertex out of range 1..{n}")
                edges.append((u - 1, v - 1))
            else:
                raise DimacsError(f"line {lineno}: unknown line type {parts[0]!r}")
        except ValueError as exc:
            if isinstance(exc, DimacsError):
                raise
            raise DimacsError(f"line {lineno}: {exc}") from None
    if n is None:
        raise DimacsError("missing problem line")
    if len(edges) != m:
        raise DimacsError(f"problem line declares {m} edges, found {len(edges)}")
    try:
        return make_graph(n, edges)
    except GraphError as exc:
        raise DimacsError(str(exc)) from None


def write_dimacs(G: Graph, comments: list[str] | None = None) -> str:
    lines = [f"c {c}" for c in comments or []]
    lines.append(f"p edge {G.n} {G.m}")
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def normalize_dimacs(text: str) -> str:
    """Drop comments, dedupe edges and sort them as u < v."""
    G = parse_dimacs(text)
    return write_dimacs(G)


def write_solution(c: Coloring) -> str:
    lines = [f"c colors {c.count}"]
    lines += [f"s {v + 1} {col + 1}" for v, col in sorted(c.normalized().colors.items())]
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> Coloring:
    colors = {}
    for raw in text.splitlines():
        parts = raw.split()
        if parts and parts[0] == "s":
            colors[int(parts[1]) - 1] = int(parts[2]) - 1
    return Coloring(colors)


# --- JSON views -----------------------------------------------------------


def _vs(vertices) -> list[int]:
    return sorted(v + 1 for v in vertices)


def _tuple(vertices) -> list[int]:
    return [v + 1 for v in vertices]


def embedding_json(e: Embedding | None):
    if e is None:
        return None
    return {"pattern": e.pattern.value, "vertices": _tuple(e.vertices)}


def class_report_json(r: ClassReport) -> dict:
    return {
        "schema": SCHEMA,
        "member": r.member,
        "c5_present": r.c5_present,
        "c7_present": r.c7_present,
        "c5twin_present": r.c5twin_present,
        "perfect": r.perfect,
        "patterns": {p.value: embedding_json(w) for p, w in r.witnesses.items()},
    }


def hole_json(h: HoleEmbedding) -> list[int]:
    return _tuple(h.vertices)


def audit_json(a: AuditReport) -> dict:
    return {
        "schema": SCHEMA,
        "hole": hole_json(a.hole),
        "ok": a.ok,
        "claims": [
            {
                "claim": r.claim,
                "description": r.description,
                "status": "pass" if r.passed else "fail",
                "witness": _tuple(r.witness) if r.witness else None,
                "detail": r.detail or None,
            }
            for r in a.results
        ],
        "notes": list(a.notes),
    }


def partition_json(P: C7Partition | C5Partition) -> dict:
    return {
        "schema": SCHEMA,
        "hole": hole_json(P.hole),
        "sets": {name: _vs(s) for name, s in P.named_sets()},
    }


def near_uniform_json(P: NearUniformPartition) -> dict:
    return {
        "sets": [{"name": n, "vertices": _vs(s)} for n, s in zip(P.names, P.sets)],
        "joins": [[P.names[a], P.names[b]] for (a, b), st in sorted(P.join_matrix.items()) if st.value == "join"],
        "nonuniform_pair": [P.names[i] for i in P.nonuniform_pair] if P.nonuniform_pair else None,
    }


def outcome_json(o) -> dict:
    if isinstance(o, CliqueCutset):
        body = {"cutset": _vs(o.cutset), "v1": _vs(o.v1), "v2": _vs(o.v2)}
    elif isinstance(o, HasC7):
        body = {"hole": hole_json(o.hole)}
    elif isinstance(o, NearUniformConstruction):
        body = {"hole": hole_json(o.hole), "removed": _vs(o.removed), "partition": near_uniform_json(o.partition)}
    elif isinstance(o, JoinCliqueC5):
        body = {"clique": _vs(o.clique), "hole": hole_json(o.hole)}
    else:
        raise TypeError(type(o))
    return {"case": o.case, "kind": type(o).__name__, **body}


def tree_json(T: DecompTree) -> dict:
    def node(x: Node) -> dict:
        if isinstance(x, Atom):
            return {"atom": _vs(x.vertices)}
        return {"cutset": _vs(x.cutset), "vertices": _vs(x.vertices), "left": node(x.left), "right": node(x.right)}

    return {"schema": SCHEMA, "n": T.graph.n, "atoms": len(T.atoms()), "root": node(T.root)}


def trace_json(trace) -> dict:
    atoms = []
    for a in trace.atoms:
        entry = {
            "vertices": _vs(a.vertices),
            "branch": a.branch,
            "colors": a.colors,
            "clique_number": a.clique,
            "member": a.report.member,
            "c5_present": a.report.c5_present,
            "c7_present": a.report.c7_present,
            "c5twin_present": a.report.c5twin_present,
            "out_of_class": a.out_of_class,
        }
        # artifacts live in atom-local ids; map them back to the parent graph
        ids = a.vertices
        if "partition" in a.artifacts:
            p = a.artifacts["partition"]
            entry["partition"] = near_uniform_json(
                NearUniformPartition(
                    tuple(frozenset(ids[v] for v in s) for s in p.sets), p.names, p.join_matrix, p.nonuniform_pair
                )
            )
        if "width" in a.artifacts:
            entry["expression_width"] = a.artifacts["width"]
        if "outcome" in a.artifacts:
            entry["outcome"] = outcome_json(_lift_outcome(a.artifacts["outcome"], ids))
        atoms.append(entry)
    return {"schema": SCHEMA, "tree": tree_json(trace.tree), "atoms": atoms}


def _lift_outcome(o, ids):
    lift = lambda s: frozenset(ids[v] for v in s)
    hole = lambda h: HoleEmbedding(tuple(ids[v] for v in h.vertices))
    if isinstance(o, CliqueCutset):
        return CliqueCutset(lift(o.cutset), lift(o.v1), lift(o.v2))
    if isinstance(o, HasC7):
        return HasC7(hole(o.hole))
    if isinstance(o, JoinCliqueC5):
        return JoinCliqueC5(lift(o.clique), hole(o.hole))
    p = o.partition
    part = NearUniformPartition(tuple(lift(s) for s in p.sets), p.names, p.join_matrix, p.nonuniform_pair)
    return NearUniformConstruction(hole(o.hole), lift(o.removed), part)
