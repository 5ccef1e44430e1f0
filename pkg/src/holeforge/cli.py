"""Command-line front end.

Exit codes:
    0  success (for ``audit``: every claim passed)
    1  an audit claim failed or a round-trip check did not hold
    2  usage error, unreadable or malformed input
    3  input outside the required domain (not (4K1, C4, C6)-free, or the
       requested hole is absent)
    4  structure violation: a counterexample to a proven statement; the
       offending graph is written to stderr in DIMACS form
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import io
from .c5 import (
    JoinCliqueC5,
    NearUniformConstruction,
    PreconditionViolation,
    TrichotomyViolation,
    audit_c5,
    build_c5_partition,
    classify_atom_with_c5,
    find_c5,
)
from .c7 import audit_c7, build_c7_partition, c7_uniform_sets, find_c7
from .cliquewidth import add_back_vertices, build_from_near_uniform, evaluate, singleton_expression, to_text, width
from .coloring import exact_chromatic
from .decomposition import decompose, find_clique_cutset
from .detection import class_report
from .generate import ENUMERATE_MAX, enumerate_small, random_in_class
from .graph import Graph
from .pipeline import StructureViolation, color_in_class
from .structure import AuditFailure, StructureError, UnclassifiableVertex, near_uniform_from_sets

OK, CLAIM_FAILED, USAGE, OUT_OF_CLASS, VIOLATION = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    command: str
    inputs: list[str] = field(default_factory=list)
    seed: int | None = None
    n: int | None = None
    hole: str = "c7"
    index: int = 0
    mode: str = "pipeline"
    require: str | None = None
    count: int = 1
    twin_free: bool = False
    dedup: bool = False
    jobs: int = 1
    out: str | None = None
    trace: str | None = None


@dataclass
class Result:
    """What one input file produced: a payload, an exit code, and stderr text."""

    code: int
    payload: dict | str
    stderr: str = ""


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _violation(G: Graph, reason: str) -> Result:
    return Result(VIOLATION, {"schema": io.SCHEMA, "error": "structure-violation", "reason": reason},
                  io.write_dimacs(G, [f"structure violation: {reason}"]))


def _out_of_class(G: Graph, what: str) -> Result:
    rep = class_report(G)
    return Result(OUT_OF_CLASS, {"schema": io.SCHEMA, "error": what,
                                 "witness": io.embedding_json(rep.forbidden_witness())})


# --- per-graph commands ----------------------------------------------------


def do_classify(G: Graph, cfg: RunConfig) -> Result:
    return Result(OK, io.class_report_json(class_report(G)))


def _partition(G: Graph, cfg: RunConfig):
    find, build = (find_c7, build_c7_partition) if cfg.hole == "c7" else (find_c5, build_c5_partition)
    H = find(G, cfg.index)
    if H is None:
        return None
    return build(G, H)


def _structured(fn):
    """Shared domain checks for commands that need class membership and a hole."""

    def run(G: Graph, cfg: RunConfig) -> Result:
        if not class_report(G).member:
            return _out_of_class(G, "not (4K1, C4, C6)-free")
        try:
            P = _partition(G, cfg)
        except UnclassifiableVertex as exc:
            return _violation(G, str(exc))
        if P is None:
            return Result(OUT_OF_CLASS, {"schema": io.SCHEMA, "error": f"no induced {cfg.hole.upper()} (index {cfg.index})"})
        return fn(G, P, cfg)

    return run


@_structured
def do_partition(G: Graph, P, cfg: RunConfig) -> Result:
    return Result(OK, io.partition_json(P))


@_structured
def do_audit(G: Graph, P, cfg: RunConfig) -> Result:
    report = audit_c7(G, P) if cfg.hole == "c7" else audit_c5(G, P)
    return Result(OK if report.ok else CLAIM_FAILED, io.audit_json(report))


def build_expression(G: Graph):
    """Pick a construction route for G; returns (route, expression, bound)."""
    rep = class_report(G)
    if rep.c7_present:
        part = c7_uniform_sets(G)
        return "c7-uniform", build_from_near_uniform(G, part), part.k + 1
    if rep.c5_present and not rep.c5twin_present and find_clique_cutset(G) is None:
        outcome = classify_atom_with_c5(G, check_precondition=False)
        if isinstance(outcome, NearUniformConstruction):
            inner = build_from_near_uniform(G, outcome.partition)
            S = len(outcome.removed)
            return "c5-case-iii", add_back_vertices(inner, G, outcome.removed), (outcome.partition.k + 1) * 2**S + S
        if isinstance(outcome, JoinCliqueC5):
            sets = [frozenset([v]) for v in outcome.hole.vertices]
            names = [f"h{i + 1}" for i in range(5)]
            if outcome.clique:
                sets.append(frozenset(outcome.clique))
                names.append("W")
            part = near_uniform_from_sets(G, sets, names)
            return "c5-case-iv", build_from_near_uniform(G, part), part.k + 1
    return "singletons", singleton_expression(G), G.n


def do_cwd_build(G: Graph, cfg: RunConfig) -> Result:
    if not class_report(G).member:
        return _out_of_class(G, "not (4K1, C4, C6)-free")
    try:
        route, expr, bound = build_expression(G)
    except (AuditFailure, TrichotomyViolation, PreconditionViolation, UnclassifiableVertex) as exc:
        return _violation(G, str(exc))
    ok = evaluate(expr).equals(G)
    w = width(expr)
    payload = {"schema": io.SCHEMA, "route": route, "width": w, "width_bound": bound,
               "roundtrip": ok, "expression": to_text(expr)}
    return Result(OK if ok and w <= bound else CLAIM_FAILED, payload)


def do_decompose(G: Graph, cfg: RunConfig) -> Result:
    return Result(OK, io.tree_json(decompose(G)))


def do_color(G: Graph, cfg: RunConfig) -> Result:
    if cfg.mode == "exact":
        k, col = exact_chromatic(G)
        return Result(OK, {"schema": io.SCHEMA, "mode": "exact", "colors": k, "solution": io.write_solution(col)})
    if not class_report(G).member:
        return _out_of_class(G, "not (4K1, C4, C6)-free")
    try:
        col, trace = color_in_class(G)
    except StructureViolation as exc:
        return _violation(exc.atom, str(exc))
    except StructureError as exc:
        return _violation(G, str(exc))
    if not col.is_proper(G):
        return _violation(G, "merged colouring is improper")
    return Result(OK, {"schema": io.SCHEMA, "mode": "pipeline", "colors": col.count,
                       "solution": io.write_solution(col), "trace": io.trace_json(trace)})


COMMANDS = {
    "classify": do_classify,
    "partition": do_partition,
    "audit": do_audit,
    "cwd-build": do_cwd_build,
    "decompose": do_decompose,
    "color": do_color,
}


def _run_file(args: tuple[str, RunConfig]) -> Result:
    path, cfg = args
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        G = io.parse_dimacs(text)
    except (OSError, io.DimacsError) as exc:
        return Result(USAGE, {"schema": io.SCHEMA, "error": f"{path}: {exc}"})
    return COMMANDS[cfg.command](G, cfg)


def _emit_graph_results(cfg: RunConfig, results: list[Result]) -> int:
    many = len(cfg.inputs) > 1
    traces = []
    for path, res in zip(cfg.inputs, results):
        if res.stderr:
            sys.stderr.write(res.stderr)
        payload = dict(res.payload, file=path) if many else res.payload
        if cfg.command == "color" and "solution" in payload:
            sol = payload.pop("solution")
            trace = payload.pop("trace", None)
            if trace is not None:
                traces.append(dict(trace, file=path))
            if many:
                sys.stdout.write(f"c file {path}\n")
            sys.stdout.write(sol)
        else:
            sys.stdout.write(_dump(payload) + "\n")
    if cfg.trace is not None:
        Path(cfg.trace).write_text(_dump(traces if many else (traces[0] if traces else None)) + "\n")
    return max((r.code for r in results), default=OK)


# --- generators ------------------------------------------------------------


def do_generate(cfg: RunConfig) -> int:
    out = Path(cfg.out) if cfg.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    for i in range(cfg.count):
        seed = cfg.seed + i
        G = random_in_class(cfg.n, seed, require=cfg.require, twin_free=cfg.twin_free)
        if G is None:
            sys.stderr.write(f"seed {seed}: no graph after rejection budget\n")
            continue
        text = io.write_dimacs(G, [f"holeforge generate n={cfg.n} seed={seed} require={cfg.require or '-'}"])
        if out:
            (out / f"n{cfg.n}_s{seed}.col").write_text(text)
        else:
            sys.stdout.write(text)
    return OK


def do_enumerate(cfg: RunConfig) -> int:
    if not 0 <= cfg.n <= ENUMERATE_MAX:
        sys.stderr.write(f"enumerate: n must be in 0..{ENUMERATE_MAX}\n")
        return USAGE
    out = Path(cfg.out) if cfg.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    count = 0
    for G in enumerate_small(cfg.n, dedup=cfg.dedup):
        if out:
            (out / f"n{cfg.n}_{count:05d}.col").write_text(io.write_dimacs(G))
        count += 1
    sys.stdout.write(_dump({"schema": io.SCHEMA, "n": cfg.n, "dedup": cfg.dedup, "count": count}) + "\n")
    return OK


# --- argument handling ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="holeforge", description="Structure tools for (4K1, C4, C6)-free graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_inputs(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("inputs", nargs="+", help="DIMACS .col files ('-' for stdin)")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes for multi-file runs")
        return sp

    with_inputs("classify", "forbidden-pattern report")
    for name, help in (("partition", "neighbourhood partition around a hole"), ("audit", "check the structural claims")):
        sp = with_inputs(name, help)
        sp.add_argument("--hole", choices=("c7", "c5"), required=True)
        sp.add_argument("--index", type=int, default=0, help="which induced hole (enumeration order)")
    with_inputs("cwd-build", "bounded-width expression with round-trip check")
    with_inputs("decompose", "clique cutset decomposition tree")
    sp = with_inputs("color", "optimal colouring")
    sp.add_argument("--mode", choices=("pipeline", "exact"), default="pipeline")
    sp.add_argument("--trace", help="write the per-atom trace JSON here")

    sp = sub.add_parser("generate", help="seeded random graphs in the class")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--require", choices=("c5", "c7"))
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--twin-free", action="store_true", help="also forbid the C5-twin")
    sp.add_argument("--out", help="corpus directory (default: stdout)")

    sp = sub.add_parser("enumerate", help="all in-class graphs on n <= 7 vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    sp.add_argument("--out", help="write each graph as a .col file here")
    return p


def parse_config(argv: list[str] | None) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    cfg = RunConfig(**{k: v for k, v in ns.items() if v is not None})
    if cfg.command == "generate" and cfg.seed is None:
        env = os.environ.get("HOLEFORGE_SEED")
        if env is None:
            raise SystemExit("generate: --seed or HOLEFORGE_SEED is required")
        cfg.seed = int(env)
    return cfg


def run(cfg: RunConfig) -> int:
    if cfg.command == "generate":
        return do_generate(cfg)
    if cfg.command == "enumerate":
        return do_enumerate(cfg)
    jobs = [(path, cfg) for path in cfg.inputs]
    if cfg.jobs > 1 and len(jobs) > 1 and "-" not in cfg.inputs:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            results = list(pool.map(_run_file, jobs))
    else:
        results = [_run_file(j) for j in jobs]
    return _emit_graph_results(cfg, results)


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            sys.stderr.write(exc.code + "\n")
        return OK if exc.code == 0 else USAGE
    try:
        return run(cfg)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
