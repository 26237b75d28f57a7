"""Hole, jump and decomposition tools for graphs of large girth without
long even holes."""

from __future__ import annotations

from .coloring import color3, exact_chromatic, find_degree2, find_small_cut
from .generators import GeneratorSpec, generate
from .graph import Graph, parse_graph, serialize_graph
from .holes import Hole, check_membership, enumerate_holes, girth
from .jumps import classify_jump, enumerate_jumps, extract_short_jump, relate_jumps
from .lemmas import LEMMA_IDS, verify_lemma, verify_suite
from .report import SuiteReport, run_suite
from .search import exhaustive_search

__version__ = "0.1.0"

__all__ = [
    "Graph", "parse_graph", "serialize_graph",
    "Hole", "girth", "enumerate_holes", "check_membership",
    "classify_jump", "enumerate_jumps", "extract_short_jump", "relate_jumps",
    "LEMMA_IDS", "verify_lemma", "verify_suite",
    "color3", "exact_chromatic", "find_degree2", "find_small_cut",
    "GeneratorSpec", "generate",
    "SuiteReport", "run_suite", "exhaustive_search",
]
