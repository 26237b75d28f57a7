"""Exhaustive search over small connected graphs of a given girth."""

from __future__ import annotations

from .canon import connected_graphs
from .errors import PreconditionViolated
from .graph import Graph
from .holes import DEFAULT_BUDGET, girth
from .report import SuiteReport, run_suite

N_MAX_CAP = 14
NAIVE_N_MAX = 9


def girth_exact_graphs(n_max: int, girth_exact: int, naive: bool = False) -> list[Graph]:
    """Connected graphs on at most ``n_max`` vertices with girth exactly ``girth_exact``.

    The default enumeration prunes by girth while growing graphs; with
    ``naive=True`` every connected graph is generated and filtered
    afterwards, which is only feasible for ``n_max <= 9``.
    """
    if naive and n_max > NAIVE_N_MAX:
        raise PreconditionViolated(f"naive enumeration is limited to n_max <= {NAIVE_N_MAX}")
    out = []
    for _, graphs in connected_graphs(n_max, None if naive else girth_exact):
        out.extend(g for g in graphs if girth(g) == girth_exact)
    return out


def exhaustive_search(
    n_max: int,
    girth_exact: int,
    suite,
    ell: int,
    budget: int = DEFAULT_BUDGET,
    naive: bool = False,
    workers: int | None = None,
) -> SuiteReport:
    if n_max > N_MAX_CAP:
        raise PreconditionViolated(f"n_max must be at most {N_MAX_CAP}")
    if girth_exact < 6:
        raise PreconditionViolated("girth must be at least 6")
    corpus = girth_exact_graphs(n_max, girth_exact, naive)
    meta = {"kind": "search", "n_max": n_max, "girth": girth_exact, "naive": naive, "size": len(corpus)}
    sources = [{"search_rank": i} for i in range(len(corpus))]
    return run_suite(corpus, ell, suite, budget, sources, meta, workers)
