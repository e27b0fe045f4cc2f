"""End-to-end driver: merge, build graphs, detect, resolve, report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .conflicts import Conflict, detect_conflicts
from .graph_diff import FourWayGraph, build_fourway
from .matching import Resolution, resolve_by_example
from .merge3 import MergeScenario, merge_scenario
from .rules import NotCovered, TargetMissing, resolve_by_rule


@dataclass
class Report:
    scenario: str
    conflicts: list[Conflict] = field(default_factory=list)
    resolutions: list[Resolution] = field(default_factory=list)
    timings_ms: dict[str, float] = field(default_factory=dict)


@dataclass
class ScenarioRun:
    report: Report
    scenario: MergeScenario
    fourway: FourWayGraph


def run_scenario(base_dir: Union[str, Path], left_dir: Union[str, Path],
                 right_dir: Union[str, Path],
                 scenario_id: Optional[str] = None) -> ScenarioRun:
    """Run the full pipeline on three source trees.

    Propagates TextualConflict when diff3 cannot produce a merged body
    and ParseError when a source file does not parse.
    """
    name = scenario_id or Path(base_dir).resolve().parent.name
    timings: dict[str, float] = {}

    t0 = time.perf_counter()
    scenario = merge_scenario(base_dir, left_dir, right_dir)
    t1 = time.perf_counter()
    timings["merge"] = (t1 - t0) * 1000.0

    fw = build_fourway(scenario)
    t2 = time.perf_counter()
    timings["graphs"] = (t2 - t1) * 1000.0

    conflicts = detect_conflicts(fw)
    t3 = time.perf_counter()
    timings["detect"] = (t3 - t2) * 1000.0

    resolutions: list[Resolution] = []
    for conflict in conflicts:
        res = resolve_by_example(fw, conflict, scenario)
        if res is not None:
            resolutions.append(res)
        try:
            resolutions.append(resolve_by_rule(fw, conflict, scenario))
        except (NotCovered, TargetMissing):
            pass
    t4 = time.perf_counter()
    timings["resolve"] = (t4 - t3) * 1000.0
    timings["total"] = (t4 - t0) * 1000.0

    report = Report(scenario=name, conflicts=conflicts,
                    resolutions=resolutions, timings_ms=timings)
    return ScenarioRun(report=report, scenario=scenario, fourway=fw)


def report_to_dict(report: Report, include_timing: bool = True) -> dict:
    index = {id(c): i for i, c in enumerate(report.conflicts)}
    out: dict = {
        "scenario": report.scenario,
        "conflicts": [
            {
                "type": c.type,
                "subject": c.subject,
                "branchOfDef": c.branch_of_def,
                "using": c.using_fqn,
                "sites": [
                    {"entity": s.entity, "file": s.file,
                     "span": list(s.span)}
                    for s in c.sites
                ],
            }
            for c in report.conflicts
        ],
        "resolutions": [
            {
                "conflict": index.get(id(r.conflict), -1),
                "strategy": r.strategy,
                "path": r.path,
                "partial": r.partial,
                "rank": r.rank,
                "sourceHost": r.source_host,
                "sigma": r.sigma,
                "exact": r.exact,
                "rule": r.rule,
            }
            for r in report.resolutions
        ],
    }
    if include_timing:
        out["timingMs"] = {k: round(v, 3)
                           for k, v in report.timings_ms.items()}
    return out
