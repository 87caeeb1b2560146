"""Spacetime summoning toolkit: feasibility, codes, protocols, simulation."""

from ._summon import (
    InfeasibleTask,
    NoChainError,
    StrategyInapplicable,
    SummoningTask,
    TaskParseError,
    causal_matrix,
    check,
    code_report,
    generators,
    graph_dot,
    load_task,
    logicals,
    parse_task,
    plan_summary,
    render_svg,
    simulate,
    task_json,
    validate,
)

__all__ = [
    "InfeasibleTask",
    "NoChainError",
    "StrategyInapplicable",
    "SummoningTask",
    "TaskParseError",
    "causal_matrix",
    "check",
    "code_report",
    "generators",
    "graph_dot",
    "load_task",
    "logicals",
    "parse_task",
    "plan_summary",
    "render_svg",
    "simulate",
    "task_json",
    "validate",
]
