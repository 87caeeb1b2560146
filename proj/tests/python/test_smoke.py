"""Smoke tests for the python bindings (built extension module)."""

import os
from pathlib import Path

import pytest

summon = pytest.importorskip("summon")

FIXTURES = Path(os.environ.get("SUMMON_FIXTURES", Path(__file__).parents[2] / "fixtures"))


def load(name):
    return summon.load_task(str(FIXTURES / f"{name}.json"))


def test_load_and_check_fixtures():
    fig1 = load("fig1")
    assert fig1.n == 2 and fig1.dim == 1
    verdict = summon.check(fig1)
    assert verdict["feasible"] is False
    assert verdict["witness"]["i"] == 0 and verdict["witness"]["j"] == 1

    for name in ["fig2", "fig3", "fig4", "fig5a", "triangle"]:
        assert summon.check(load(name))["feasible"] is True


def test_parse_and_validate():
    task = summon.parse_task(
        '{"version":1,"dim":1,"start":{"t":"0","x":["0"]},'
        '"pairs":[{"call":{"t":"1","x":["1"]},"reveal":{"t":"3","x":["1"]}}]}'
    )
    assert summon.validate(task) == []
    with pytest.raises(summon.TaskParseError):
        summon.parse_task("{ not json")


def test_causal_matrix():
    matrix = summon.causal_matrix(load("fig2"))
    assert matrix[0][1] is True
    assert matrix[1][0] is False


def test_task_json_round_trip():
    doc = summon.task_json(load("fig3"))
    assert doc["version"] == 1 and doc["dim"] == 2
    assert doc["axis_radicands"] == [1, 3]
    import json

    again = summon.parse_task(json.dumps(doc))
    assert summon.check(again)["feasible"] is True


def test_code_report():
    report = summon.code_report(4)
    assert report["qubits"] == 12
    assert len(report["per_vertex"]) == 4
    for v in report["per_vertex"]:
        assert v["erasure_correctable"] and not v["complement_correctable"]
        assert v["cws_condition"]

    gens = summon.generators(2)
    assert gens == ["+YY"]
    lx, lz = summon.logicals(2)
    assert (lx, lz) == ("+XZ", "+ZZ")


def test_simulate_roundtrip():
    task = load("fig5a")
    for call in [None, 0, 1, 2, 3]:
        report = summon.simulate(task, call=call, state="Y-", seed=3)
        assert report["success"] is True
        assert report["audit_violations"] == []
        if call is None:
            assert report["revealed_at"] is None
        else:
            assert report["revealed_at"] is not None


def test_infeasible_raises():
    with pytest.raises(summon.InfeasibleTask):
        summon.simulate(load("fig1"), call=0)


def test_plan_summary_and_diagram():
    plan = summon.plan_summary(load("fig3"), "cws")
    assert plan["strategy"] == "cws"
    assert len(plan["code_edges"]) == 3

    recursive = summon.plan_summary(load("triangle"), "recursive")
    assert recursive["leaf_count"] == 3

    svg = summon.render_svg(load("fig2"))
    assert svg.startswith("<svg")
    dot = summon.graph_dot(load("fig5a"))
    assert dot.startswith("digraph")
