"""Line-based three-way merge.

The merge aligns base/left and base/right with difflib and composes the two
edit sets.  Regions changed on one side only take that side; regions changed
identically on both sides are taken once; overlapping differing regions raise
TextualConflict -- this merger never emits conflict markers, callers are
expected to stop instead (exit code 3 at the CLI).

File-level rules: a file absent from the base is taken verbatim from the
branch that adds it; a file deleted by one branch and untouched by the other
is deleted; deletion against modification is a textual conflict too.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass, field
from pathlib import Path

from .parser import parse_unit
from .syntax import SourceFile


class TextualConflict(Exception):
    def __init__(self, path: str, region: tuple[int, int] | None = None):
        where = f" lines {region[0]}-{region[1]}" if region else ""
        super().__init__(f"textual conflict in {path}{where}")
        self.path = path
        self.region = region


@dataclass
class _Edit:
    lo: int
    hi: int
    lines: list[str]

    def same(self, other: "_Edit") -> bool:
        return self.lo == other.lo and self.hi == other.hi \
            and self.lines == other.lines


def _edits(base: list[str], changed: list[str]) -> list[_Edit]:
    matcher = difflib.SequenceMatcher(a=base, b=changed, autojunk=False)
    out = []
    for tag, a_lo, a_hi, b_lo, b_hi in matcher.get_opcodes():
        if tag != "equal":
            out.append(_Edit(a_lo, a_hi, changed[b_lo:b_hi]))
    return out


def _overlap(a: _Edit, b: _Edit) -> bool:
    if a.lo == b.lo and a.hi == b.hi:
        return True
    return a.lo < b.hi and b.lo < a.hi


def merge_file(base: str, left: str, right: str, path: str = "<file>") -> str:
    base_l = base.splitlines(keepends=True)
    left_e = _edits(base_l, left.splitlines(keepends=True))
    right_e = _edits(base_l, right.splitlines(keepends=True))

    merged: list[_Edit] = []
    li = ri = 0
    while li < len(left_e) or ri < len(right_e):
        if ri >= len(right_e):
            merged.append(left_e[li]); li += 1
            continue
        if li >= len(left_e):
            merged.append(right_e[ri]); ri += 1
            continue
        le, re = left_e[li], right_e[ri]
        if _overlap(le, re):
            if le.same(re):
                merged.append(le)
                li += 1
                ri += 1
                continue
            raise TextualConflict(path, (min(le.lo, re.lo) + 1,
                                         max(le.hi, re.hi)))
        if (le.lo, le.hi) <= (re.lo, re.hi):
            merged.append(le); li += 1
        else:
            merged.append(re); ri += 1

    out: list[str] = []
    cursor = 0
    for e in merged:
        out.extend(base_l[cursor:e.lo])
        out.extend(e.lines)
        cursor = max(cursor, e.hi)
    out.extend(base_l[cursor:])
    return "".join(out)


@dataclass
class MergeScenario:
    base: dict[str, SourceFile] = field(default_factory=dict)
    left: dict[str, SourceFile] = field(default_factory=dict)
    right: dict[str, SourceFile] = field(default_factory=dict)
    am: dict[str, SourceFile] = field(default_factory=dict)


def _read_tree(root: Path) -> dict[str, str]:
    files = {}
    if root.is_dir():
        for p in sorted(root.rglob("*.java")):
            files[str(p.relative_to(root))] = p.read_text()
    return files


def merge_texts(base: dict[str, str], left: dict[str, str],
                right: dict[str, str]) -> dict[str, str]:
    """Merge three path->text maps; raises TextualConflict."""
    am: dict[str, str] = {}
    for path in sorted(set(base) | set(left) | set(right)):
        b, l, r = base.get(path), left.get(path), right.get(path)
        if b is None:
            if l is not None and r is not None:
                am[path] = l if l == r else merge_file("", l, r, path)
            else:
                am[path] = l if l is not None else r  # type: ignore[assignment]
            continue
        if l is None and r is None:
            continue  # deleted on both sides
        if l is None or r is None:
            survivor = l if l is not None else r
            if survivor == b:
                continue  # deleted on one side, untouched on the other
            raise TextualConflict(path)
        am[path] = merge_file(b, l, r, path)
    return am


def merge_scenario(base_dir: str | Path, left_dir: str | Path,
                   right_dir: str | Path) -> MergeScenario:
    base = _read_tree(Path(base_dir))
    left = _read_tree(Path(left_dir))
    right = _read_tree(Path(right_dir))
    am = merge_texts(base, left, right)
    scenario = MergeScenario()
    for bucket, files in (("base", base), ("left", left),
                          ("right", right), ("am", am)):
        parsed = {p: parse_unit(p, text) for p, text in sorted(files.items())}
        setattr(scenario, bucket, parsed)
    return scenario
