"""Corpus evaluation: detection coverage and resolution accuracy.

A corpus directory holds one subdirectory per merge scenario, each with
base/, left/, right/ and expected/ source trees, plus a golden_key.json
mapping scenario names to the conflicts a reviewer expects and the
hand-assigned verdict for each strategy ("correct", "incorrect", or null
when the strategy produces nothing).

A produced resolution counts as correct when its rewritten file is
token-identical to the counterpart under expected/.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .pipeline import ScenarioRun, run_scenario
from .printer import token_stream

STRATEGIES = ("example", "rule")


class MissingGolden(Exception):
    """The corpus has no golden entry for a scenario (or no key at all)."""


@dataclass
class ScenarioResult:
    scenario: str
    expected: list[tuple[str, str]]          # (type, subject)
    detected: list[tuple[str, str]]
    covered: int                             # expected conflicts found
    verdicts: dict[str, Optional[str]] = field(default_factory=dict)


@dataclass
class EvalSummary:
    coverage: float
    accuracy: float
    per_strategy: dict[str, dict[str, int]]
    per_type: dict[str, dict[str, int]]
    scenarios: list[ScenarioResult] = field(default_factory=list)


def _verdict(run: ScenarioRun, strategy: str,
             expected_dir: Path) -> Optional[str]:
    produced = [r for r in run.report.resolutions if r.strategy == strategy]
    if not produced:
        return None
    for res in produced:
        want = expected_dir / res.path
        if not want.is_file():
            return "incorrect"
        if token_stream(res.text) != token_stream(want.read_text()):
            return "incorrect"
    if len(produced) < len(run.report.conflicts):
        return "incorrect"
    return "correct"


def scenario_dirs(corpus_dir: Union[str, Path]) -> list[Path]:
    root = Path(corpus_dir)
    return sorted(p for p in root.iterdir()
                  if p.is_dir() and (p / "base").is_dir())


def evaluate_scenario(scenario_dir: Path,
                      golden: dict) -> ScenarioResult:
    run = run_scenario(scenario_dir / "base", scenario_dir / "left",
                       scenario_dir / "right",
                       scenario_id=scenario_dir.name)
    expected = [(c["type"], c["subject"]) for c in golden["conflicts"]]
    detected = [(c.type, c.subject) for c in run.report.conflicts]
    remaining = list(detected)
    covered = 0
    for want in expected:
        if want in remaining:
            remaining.remove(want)
            covered += 1
    verdicts = {s: _verdict(run, s, scenario_dir / "expected")
                for s in STRATEGIES}
    return ScenarioResult(scenario=scenario_dir.name, expected=expected,
                          detected=detected, covered=covered,
                          verdicts=verdicts)


def evaluate_corpus(corpus_dir: Union[str, Path]) -> EvalSummary:
    root = Path(corpus_dir)
    key_path = root / "golden_key.json"
    if not key_path.is_file():
        raise MissingGolden(f"no golden_key.json under {root}")
    key = json.loads(key_path.read_text())

    results: list[ScenarioResult] = []
    for sdir in scenario_dirs(root):
        golden = key.get(sdir.name)
        if golden is None:
            raise MissingGolden(f"no golden entry for {sdir.name}")
        results.append(evaluate_scenario(sdir, golden))

    total_expected = sum(len(r.expected) for r in results)
    total_covered = sum(r.covered for r in results)

    per_strategy = {s: {"produced": 0, "correct": 0} for s in STRATEGIES}
    per_type: dict[str, dict[str, int]] = {}
    for r in results:
        resolved_here = any(v is not None for v in r.verdicts.values())
        correct_here = any(v == "correct" for v in r.verdicts.values())
        for code, _subject in r.expected:
            row = per_type.setdefault(
                code, {"expected": 0, "detected": 0, "resolved": 0,
                       "correct": 0})
            row["expected"] += 1
            row["resolved"] += int(resolved_here)
            row["correct"] += int(correct_here)
        remaining = list(r.expected)
        for det in r.detected:
            if det in remaining:
                remaining.remove(det)
                per_type[det[0]]["detected"] += 1
        for s in STRATEGIES:
            if r.verdicts[s] is not None:
                per_strategy[s]["produced"] += 1
            if r.verdicts[s] == "correct":
                per_strategy[s]["correct"] += 1

    produced = sum(v["produced"] for v in per_strategy.values())
    correct = sum(v["correct"] for v in per_strategy.values())
    return EvalSummary(
        coverage=total_covered / total_expected if total_expected else 1.0,
        accuracy=correct / produced if produced else 0.0,
        per_strategy=per_strategy,
        per_type=per_type,
        scenarios=results,
    )


def summary_to_dict(summary: EvalSummary) -> dict:
    return {
        "coverage": round(summary.coverage, 4),
        "accuracy": round(summary.accuracy, 4),
        "perStrategy": summary.per_strategy,
        "perType": {k: summary.per_type[k]
                    for k in sorted(summary.per_type,
                                    key=lambda c: int(c[1:]))},
        "scenarios": [
            {
                "scenario": r.scenario,
                "expected": [list(t) for t in r.expected],
                "detected": [list(t) for t in r.detected],
                "covered": r.covered,
                "verdicts": r.verdicts,
            }
            for r in summary.scenarios
        ],
    }
