"""Structure, clique-width and colouring tools for (4K1, C4, C6)-free graphs."""

from .coloring import exact_chromatic, max_clique
from .decomposition import Coloring, decompose, find_clique_cutset, merge_colorings
from .detection import Pattern, class_report, find_induced, is_member
from .graph import Graph, complete_graph, cycle_graph, empty_graph, make_graph
from .pipeline import color_in_class

__all__ = [
    "Coloring",
    "Graph",
    "Pattern",
    "class_report",
    "color_in_class",
    "complete_graph",
    "cycle_graph",
    "decompose",
    "empty_graph",
    "exact_chromatic",
    "find_clique_cutset",
    "find_induced",
    "is_member",
    "make_graph",
    "max_clique",
    "merge_colorings",
]
