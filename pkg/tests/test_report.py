from __future__ import annotations

import json

import pytest

from conftest import c10, complete
from evenhole.canon import certificate
from evenhole.errors import PreconditionViolated
from evenhole.generators import theta
from evenhole.graph import Graph
from evenhole.lemmas import LemmaVerdict
from evenhole.report import (
    SCHEMA_VERSION,
    GraphResult,
    SuiteReport,
    overall_status,
    resolve_suite,
    run_suite,
)
from evenhole.search import exhaustive_search, girth_exact_graphs


def test_c10_all_passes():
    rep = run_suite([c10()], 5, "all")
    assert rep.status == "pass" and rep.exit_code == 0
    statuses = [v.status for v in rep.graphs[0].verdicts]
    assert statuses.count("vacuous") == 5
    assert rep.graphs[0].coloring["colors_used"] == 2


def test_thetas_pass():
    rep = run_suite([theta(5, 5, 5), theta(5, 5, 6), theta(5, 5, 8)], 5, "L-ThetaEars,L-JumpLength,T-Decomp")
    assert rep.status == "pass"
    assert all(v.status == "holds" for r in rep.graphs for v in r.verdicts)


def test_k4_vacuous_but_pass():
    rep = run_suite([complete(4)], 5, ["T-Decomp"])
    assert rep.graphs[0].verdicts[0].status == "vacuous"
    # not a member, so the structure miss does not count against the run
    assert rep.graphs[0].coloring["structure_misses"] == 1
    assert rep.status == "pass" and rep.exit_code == 0


def test_resolve_suite():
    assert resolve_suite("L-HoleNbr, L-HoleNbr,T-Decomp") == ["L-HoleNbr", "T-Decomp"]
    assert len(resolve_suite("all")) == 16
    with pytest.raises(ValueError):
        resolve_suite("")
    with pytest.raises(ValueError):
        resolve_suite("L-Missing")


def _result(status: str, in_h: bool = True, misses: int = 0, colors: int = 2) -> GraphResult:
    return GraphResult(0, 1, [], {}, {"in_H": in_h}, [LemmaVerdict("L-HoleNbr", status)],
                       {"colors_used": colors, "proper": True, "structure_misses": misses, "tree_nodes": 1})


def test_status_is_a_function_of_verdicts():
    assert overall_status([_result("holds"), _result("vacuous")]) == "pass"
    assert overall_status([_result("holds"), _result("violated")]) == "fail"
    assert overall_status([_result("holds", misses=1)]) == "fail"
    assert overall_status([_result("holds", colors=4)]) == "fail"
    assert overall_status([_result("holds", in_h=False, misses=1)]) == "pass"
    rep = SuiteReport(5, ["L-HoleNbr"], 10, {}, [_result("budget_exhausted")])
    assert rep.status == "pass" and rep.exit_code == 2
    rep.graphs.append(_result("violated"))
    assert rep.exit_code == 1


def test_budget_exhaustion_exit_code():
    rep = run_suite([theta(5, 5, 6)], 5, "L-JumpLength", budget=5)
    assert rep.budget_exhausted == [0] and rep.exit_code == 2
    assert rep.graphs[0].membership is None


def test_round_trip_and_schema():
    rep = run_suite([c10(), theta(5, 5, 6), Graph(11, list(c10().edges) + [(10, 0), (10, 5)])], 5, "all")
    text = rep.dumps()
    back = SuiteReport.loads(text)
    assert back == rep and back.dumps() == text
    d = json.loads(text)
    assert d["schema_version"] == SCHEMA_VERSION and "timing" not in d
    with pytest.raises(ValueError):
        SuiteReport.from_json(dict(d, schema_version=99))


def test_workers_do_not_change_output():
    gs = [theta(a, 10 - a, c) for a in (2, 3, 4) for c in (4, 6)]
    one = run_suite(gs, 5, "all", workers=1).dumps()
    two = run_suite(gs, 5, "all", workers=2).dumps()
    assert one == two


def test_search_exact_girth_10():
    rep = exhaustive_search(10, 10, "T-Decomp", 5)
    assert [r.n for r in rep.graphs] == [10]
    assert rep.corpus == {"kind": "search", "n_max": 10, "girth": 10, "naive": False, "size": 1}


def test_search_naive_matches_pruned_up_to_8():
    a = [certificate(g) for g in girth_exact_graphs(8, 6)]
    b = [certificate(g) for g in girth_exact_graphs(8, 6, naive=True)]
    assert a == b and len(a) == 8


def test_search_preconditions():
    with pytest.raises(PreconditionViolated):
        exhaustive_search(15, 6, "all", 3)
    with pytest.raises(PreconditionViolated):
        exhaustive_search(10, 5, "all", 3)
    with pytest.raises(PreconditionViolated):
        girth_exact_graphs(10, 6, naive=True)


def test_search_small_has_no_violations():
    rep = exhaustive_search(10, 6, "L-HoleNbr,L-ThetaEars,L-EvenK4", 3)
    assert rep.status == "pass" and not rep.budget_exhausted
    assert rep.summary()["in_H"] > 0
