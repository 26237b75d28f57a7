"""Suite orchestration and the versioned JSON report.

Reports carry no timing so that equal inputs give byte-identical files
regardless of the worker count.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coloring import color3
from .errors import BudgetExhausted
from .graph import Graph
from .holes import DEFAULT_BUDGET, check_membership
from .lemmas import LEMMA_IDS, LemmaVerdict, verify_suite

SCHEMA_VERSION = 1
THREADS_ENV = "EVENHOLE_THREADS"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_BUDGET = 2


@dataclass
class GraphResult:
    index: int
    n: int
    edges: list[list[int]]
    source: dict
    membership: dict | None
    verdicts: list[LemmaVerdict]
    coloring: dict

    @property
    def in_H(self) -> bool:
        return bool(self.membership and self.membership["in_H"])

    @property
    def violated(self) -> bool:
        return any(v.status == "violated" for v in self.verdicts)

    @property
    def color_failure(self) -> bool:
        c = self.coloring
        return self.in_H and (c["structure_misses"] > 0 or c["colors_used"] > 3 or not c["proper"])

    @property
    def budget_exhausted(self) -> bool:
        return self.membership is None or any(v.status == "budget_exhausted" for v in self.verdicts)

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "n": self.n,
            "edges": self.edges,
            "source": self.source,
            "membership": self.membership,
            "verdicts": [v.to_json() for v in self.verdicts],
            "coloring": self.coloring,
        }

    @classmethod
    def from_json(cls, d: dict) -> "GraphResult":
        return cls(d["index"], d["n"], d["edges"], d["source"], d["membership"],
                   [LemmaVerdict.from_json(v) for v in d["verdicts"]], d["coloring"])


def overall_status(results: list[GraphResult]) -> str:
    if any(r.violated or r.color_failure for r in results):
        return "fail"
    return "pass"


@dataclass
class SuiteReport:
    ell: int
    suite: list[str]
    budget: int
    corpus: dict
    graphs: list[GraphResult] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    @property
    def status(self) -> str:
        return overall_status(self.graphs)

    @property
    def budget_exhausted(self) -> list[int]:
        return [r.index for r in self.graphs if r.budget_exhausted]

    @property
    def exit_code(self) -> int:
        if self.status == "fail":
            return EXIT_FAIL
        return EXIT_BUDGET if self.budget_exhausted else EXIT_PASS

    def summary(self) -> dict:
        counts: dict[str, Counter] = {lid: Counter() for lid in self.suite}
        for r in self.graphs:
            for v in r.verdicts:
                counts[v.lemma_id][v.status] += 1
        return {
            "graphs": len(self.graphs),
            "in_H": sum(r.in_H for r in self.graphs),
            "verdicts": {lid: dict(sorted(c.items())) for lid, c in counts.items()},
            "violations": [r.index for r in self.graphs if r.violated],
            "color_failures": [r.index for r in self.graphs if r.color_failure],
            "budget_exhausted": self.budget_exhausted,
        }

    def to_json(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "status": self.status,
            "ell": self.ell,
            "suite": self.suite,
            "budget": self.budget,
            "corpus": self.corpus,
            "summary": self.summary(),
            "graphs": [r.to_json() for r in self.graphs],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, d: dict) -> "SuiteReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        return cls(d["ell"], d["suite"], d["budget"], d["corpus"],
                   [GraphResult.from_json(r) for r in d["graphs"]], d["schema_version"])

    @classmethod
    def loads(cls, text: str) -> "SuiteReport":
        return cls.from_json(json.loads(text))


def resolve_suite(suite) -> list[str]:
    """``"all"``, a comma list or a sequence of ids, checked and deduplicated."""
    if isinstance(suite, str):
        suite = list(LEMMA_IDS) if suite.strip() == "all" else [s.strip() for s in suite.split(",") if s.strip()]
    out = []
    for lid in suite:
        if lid not in LEMMA_IDS:
            raise ValueError(f"unknown lemma id {lid!r}")
        if lid not in out:
            out.append(lid)
    if not out:
        raise ValueError("the suite is empty")
    return out


def analyze_one(index: int, g: Graph, source: dict, ell: int, suite: list[str], budget: int) -> GraphResult:
    try:
        membership = check_membership(g, ell, budget).to_json()
    except BudgetExhausted:
        membership = None
    verdicts = verify_suite(g, suite, ell, budget)
    res = color3(g, ell)
    coloring = {
        "colors_used": res.colors_used,
        "proper": res.coloring.is_proper(g),
        "structure_misses": len(res.misses),
        "tree_nodes": len(res.tree.nodes),
    }
    return GraphResult(index, g.n, [list(e) for e in g.sorted_edges()], source, membership, verdicts, coloring)


def _work(args) -> GraphResult:
    index, n, edges, source, ell, suite, budget = args
    return analyze_one(index, Graph(n, edges), source, ell, suite, budget)


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def run_suite(
    corpus: list[Graph],
    ell: int,
    suite,
    budget: int = DEFAULT_BUDGET,
    sources: list[dict] | None = None,
    meta: dict | None = None,
    workers: int | None = None,
) -> SuiteReport:
    """Membership, verdicts and a colouring for every graph, in input order.

    ``workers`` defaults to ``$EVENHOLE_THREADS`` (1 when unset); results
    are gathered in order, so the report does not depend on it.
    """
    suite = resolve_suite(suite)
    if sources is None:
        sources = [{} for _ in corpus]
    jobs = [(i, g.n, g.sorted_edges(), src, ell, suite, budget) for i, (g, src) in enumerate(zip(corpus, sources))]
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_work, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    else:
        results = [_work(j) for j in jobs]
    return SuiteReport(ell, suite, budget, meta or {"kind": "explicit", "size": len(corpus)}, results)
