"""Structure-driven colouring of (4K1, C4, C6)-free graphs.

The graph is split into atoms along clique cutsets.  Each atom gets the
structural certificate its branch calls for (a bounded-width expression
that must evaluate back to the atom, or the clique-plus-C5 join) and is
then coloured; the atom colourings are merged along the tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .c5 import JoinCliqueC5, NearUniformConstruction, classify_atom_with_c5
from .c7 import c7_uniform_sets
from .cliquewidth import add_back_vertices, build_from_near_uniform, evaluate, width
from .coloring import exact_chromatic, max_clique
from .decomposition import Coloring, DecompTree, decompose, merge_colorings
from .detection import ClassReport, class_report
from .graph import Graph, induced_subgraph
from .structure import StructureError

PERFECT = "perfect"
C7_UNIFORM = "c7-uniform"
C5_CASE_III = "c5-case-iii"
C5_CASE_IV = "c5-case-iv"
FALLBACK = "fallback-exact"


class StructureViolation(StructureError):
    def __init__(self, atom: Graph, vertices: tuple[int, ...], reason: str):
        self.atom = atom
        self.vertices = vertices
        super().__init__(f"atom {list(vertices)}: {reason}")


@dataclass(frozen=True)
class AtomTrace:
    vertices: tuple[int, ...]
    report: ClassReport
    branch: str
    colors: int
    clique: int
    artifacts: dict = field(default_factory=dict, hash=False)
    out_of_class: bool = False


@dataclass(frozen=True)
class StructureTrace:
    tree: DecompTree
    atoms: tuple[AtomTrace, ...]


def color_join_clique_c5(outcome: JoinCliqueC5) -> Coloring:
    """|K| + 3 colours: the hole takes 0,1,0,1,2 and K the rest."""
    colors = {v: c for v, c in zip(outcome.hole.vertices, (0, 1, 0, 1, 2))}
    for k, v in enumerate(sorted(outcome.clique)):
        colors[v] = 3 + k
    return Coloring(colors)


def _color_atom(sub: Graph, ids: tuple[int, ...]) -> tuple[Coloring, AtomTrace]:
    report = class_report(sub)
    omega = max_clique(sub).size
    art: dict = {}

    def fail(reason: str):
        raise StructureViolation(sub, ids, reason)

    if not report.member:
        k, col = exact_chromatic(sub)
        return col, AtomTrace(ids, report, FALLBACK, k, omega, art, out_of_class=True)

    if report.perfect:
        k, col = exact_chromatic(sub)
        if k != omega:
            fail(f"no C5/C7 yet chromatic number {k} != clique number {omega}")
        return col, AtomTrace(ids, report, PERFECT, k, omega, art)

    if report.c7_present:
        part = c7_uniform_sets(sub)
        expr = build_from_near_uniform(sub, part)
        if not evaluate(expr).equals(sub):
            fail("C7 expression does not rebuild the atom")
        if width(expr) > part.k + 1:
            fail(f"C7 expression width {width(expr)} exceeds {part.k + 1}")
        art.update(partition=part, expression=expr, width=width(expr))
        k, col = exact_chromatic(sub)
        return col, AtomTrace(ids, report, C7_UNIFORM, k, omega, art)

    if not report.c5twin_present:
        outcome = classify_atom_with_c5(sub, check_precondition=False)
        art["outcome"] = outcome
        if not outcome.verify(sub):
            fail(f"case ({outcome.case}) witness does not verify")
        if isinstance(outcome, JoinCliqueC5):
            col = color_join_clique_c5(outcome)
            return col, AtomTrace(ids, report, C5_CASE_IV, col.count, omega, art)
        if isinstance(outcome, NearUniformConstruction):
            inner = build_from_near_uniform(sub, outcome.partition)
            expr = add_back_vertices(inner, sub, outcome.removed)
            if not evaluate(expr).equals(sub):
                fail("case (iii) expression does not rebuild the atom")
            art.update(expression=expr, width=width(expr))
            k, col = exact_chromatic(sub)
            return col, AtomTrace(ids, report, C5_CASE_III, k, omega, art)
        fail(f"atom without clique cutset or C7 classified as case ({outcome.case})")

    k, col = exact_chromatic(sub)
    return col, AtomTrace(ids, report, FALLBACK, k, omega, art)


def color_in_class(G: Graph) -> tuple[Coloring, StructureTrace]:
    tree = decompose(G)
    colorings = {}
    traces = []
    for atom in tree.atoms():
        sub, ids = induced_subgraph(G, atom)
        col, tr = _color_atom(sub, ids)
        colorings[atom] = col.relabelled(ids)
        traces.append(tr)
    return merge_colorings(tree, colorings), StructureTrace(tree, tuple(traces))
