"""Anchoring a transformation pattern in the merged code and applying it.

The pattern's statement holding the last critical use anchors the search:
the best-scoring statement of the merged member is paired with it, then
preceding and following sibling statements extend the pairing order-
preservingly, and finally enclosing statements pair up by header.  A pair
scores one point for equal kinds plus the trigram similarity of the
statement texts when it clears 0.618; 1.618 is the bar a pair must clear.

Application rewrites a clone of the whole merged file: ops whose governing
pattern statement was matched are remapped into the paired statement by a
kind-aligned walk and replayed there.
"""

from __future__ import annotations

from dataclasses import dataclass
from difflib import SequenceMatcher
from typing import Optional

from .conflicts import Conflict
from .inference import (NoRelevantEdit, TransformationPattern, infer_pattern,
                        op_target_id)
from .merge3 import MergeScenario
from .mining import mine_examples
from .graph_diff import FourWayGraph
from .printer import pretty_print, statement_header_text
from .similarity import trigram_similarity
from .syntax import (STATEMENT_KINDS, SourceFile, SyntaxNode, SyntaxTree,
                     clone_node)
from .tree_diff import EditOp

SIM_THRESHOLD = 0.618
ANCHOR_THRESHOLD = 1.618


class NoAnchor(Exception):
    """No statement of the merged member scores above the anchor bar."""


class RemapFailure(Exception):
    """An op's nodes could not be mapped into the merged statement."""


@dataclass
class MatchSet:
    pairs: list[tuple[SyntaxNode, SyntaxNode, float]]
    sigma: float
    exact: int

    @property
    def anchor(self) -> tuple[SyntaxNode, SyntaxNode]:
        return self.pairs[0][0], self.pairs[0][1]


@dataclass
class Resolution:
    strategy: str               # example | rule
    conflict: Conflict
    path: str
    text: str
    partial: bool = False
    rank: Optional[int] = None
    source_host: Optional[str] = None
    sigma: Optional[float] = None
    exact: Optional[int] = None
    rule: Optional[str] = None


def score_statement_match(p: SyntaxNode, m: SyntaxNode) -> float:
    score = 1.0 if p.kind == m.kind else 0.0
    sim = trigram_similarity(statement_header_text(p),
                             statement_header_text(m))
    if sim > SIM_THRESHOLD:
        score += sim
    return score


# ---------------------------------------------------------------------------
# anchoring


def _statement_siblings(tree: SyntaxTree,
                        stmt: SyntaxNode) -> list[SyntaxNode]:
    parent = tree.parent(stmt)
    if parent is None:
        return [stmt]
    return [c for c in parent.children if c.kind in STATEMENT_KINDS]


def _parent_statement(tree: SyntaxTree,
                      node: SyntaxNode) -> Optional[SyntaxNode]:
    parent = tree.parent(node)
    if parent is None:
        return None
    return tree.enclosing_statement(parent)


def match_context(pattern: TransformationPattern,
                  m_tree: SyntaxTree) -> MatchSet:
    ctx = pattern.context
    crit = [ctx.node(i) for i in sorted(pattern.critical_ids)
            if ctx.has_node(i)]
    if not crit:
        raise NoAnchor("pattern has no critical nodes")
    last = max(crit, key=lambda n: n.span or (0, 0, 0, 0))
    s_p = ctx.enclosing_statement(last)
    if s_p is None:
        raise NoAnchor("last critical use sits outside any statement")

    m_stmts = [n for n in m_tree.nodes() if n.kind in STATEMENT_KINDS]
    if not m_stmts:
        raise NoAnchor("merged member has no statements")
    scored = sorted(((score_statement_match(s_p, m), pos)
                     for pos, m in enumerate(m_stmts)),
                    key=lambda t: (-t[0], t[1]))
    best_score, best_pos = scored[0]
    if best_score <= ANCHOR_THRESHOLD:
        raise NoAnchor(f"best anchor score {best_score:.3f}")
    s_m = m_stmts[best_pos]
    pairs = [(s_p, s_m, best_score)]

    p_sibs = _statement_siblings(ctx, s_p)
    m_sibs = _statement_siblings(m_tree, s_m)
    p_idx = p_sibs.index(s_p)
    m_idx = m_sibs.index(s_m)

    bound = m_idx
    for p_sib in reversed(p_sibs[:p_idx]):
        cands = sorted(((score_statement_match(p_sib, m_sibs[j]), j)
                        for j in range(bound)),
                       key=lambda t: (-t[0], -t[1]))
        if not cands or cands[0][0] <= ANCHOR_THRESHOLD:
            break
        sc, j = cands[0]
        pairs.append((p_sib, m_sibs[j], sc))
        bound = j

    bound = m_idx
    for p_sib in p_sibs[p_idx + 1:]:
        cands = sorted(((score_statement_match(p_sib, m_sibs[j]), j)
                        for j in range(bound + 1, len(m_sibs))),
                       key=lambda t: (-t[0], t[1]))
        if not cands or cands[0][0] <= ANCHOR_THRESHOLD:
            break
        sc, j = cands[0]
        pairs.append((p_sib, m_sibs[j], sc))
        bound = j

    p_cur, m_cur = s_p, s_m
    while True:
        pp = _parent_statement(ctx, p_cur)
        mm = _parent_statement(m_tree, m_cur)
        if pp is None or mm is None:
            break
        sc = score_statement_match(pp, mm)
        if sc <= ANCHOR_THRESHOLD:
            break
        pairs.append((pp, mm, sc))
        p_cur, m_cur = pp, mm

    sigma = sum(sc for _, _, sc in pairs)
    exact = sum(1 for _, _, sc in pairs if sc == 2.0)
    return MatchSet(pairs=pairs, sigma=sigma, exact=exact)


def rank_candidates(cands: list[tuple[TransformationPattern, MatchSet]]
                    ) -> list[tuple[TransformationPattern, MatchSet]]:
    """Best candidate first: highest sigma, then most exact pairs, then
    the lexicographically smallest source host."""
    return sorted(cands, key=lambda pm: (-pm[1].sigma, -pm[1].exact,
                                         pm[0].example.host))


# ---------------------------------------------------------------------------
# application


def _depth(tree: SyntaxTree, node: SyntaxNode) -> int:
    return sum(1 for _ in tree.ancestors(node))


def _map_pair(p: SyntaxNode, w: SyntaxNode,
              mapping: dict[int, SyntaxNode]) -> None:
    mapping[p.id] = w
    sm = SequenceMatcher(a=[c.kind for c in p.children],
                         b=[c.kind for c in w.children], autojunk=False)
    for block in sm.get_matching_blocks():
        for k in range(block.size):
            _map_pair(p.children[block.a + k], w.children[block.b + k],
                      mapping)


def _apply_op(work: SyntaxTree, op: EditOp,
              mapping: dict[int, SyntaxNode]) -> None:
    if op.op == "update":
        node = mapping.get(op.node_id)
        if node is None:
            raise RemapFailure(f"update target {op.node_id}")
        node.value = op.value or ""
        return
    if op.op == "delete":
        node = mapping.get(op.node_id)
        parent = work.parent(node) if node is not None else None
        if node is None or parent is None:
            raise RemapFailure(f"delete target {op.node_id}")
        parent.children.remove(node)
        work.reindex()
        return
    if op.op == "add":
        parent = mapping.get(op.parent_id) if op.parent_id is not None \
            else None
        if parent is None or op.node_kind is None:
            raise RemapFailure(f"add under {op.parent_id}")
        new = SyntaxNode(kind=op.node_kind, value=op.value or "",
                         children=[], span=None, id=work.fresh_id())
        idx = op.index if op.index is not None else len(parent.children)
        idx = max(0, min(idx, len(parent.children)))
        parent.children.insert(idx, new)
        mapping[op.node_id] = new
        work.reindex()
        return
    if op.op == "move":
        node = mapping.get(op.node_id)
        parent = mapping.get(op.parent_id) if op.parent_id is not None \
            else None
        if node is None or parent is None:
            raise RemapFailure(f"move target {op.node_id}")
        probe: Optional[SyntaxNode] = parent
        while probe is not None:
            if probe is node:
                raise RemapFailure("move would create a cycle")
            probe = work.parent(probe)
        old_parent = work.parent(node)
        if old_parent is None:
            raise RemapFailure("move of the root")
        old_parent.children.remove(node)
        idx = op.index if op.index is not None else len(parent.children)
        idx = max(0, min(idx, len(parent.children)))
        parent.children.insert(idx, node)
        work.reindex()
        return
    raise RemapFailure(f"unknown op {op.op}")


def apply_pattern(pattern: TransformationPattern, match_set: MatchSet,
                  conflict: Conflict,
                  am_file: SourceFile) -> Optional[Resolution]:
    work = SyntaxTree(clone_node(am_file.tree.root))
    mapping: dict[int, SyntaxNode] = {}
    for p_stmt, m_stmt, _sc in sorted(
            match_set.pairs,
            key=lambda t: _depth(pattern.context, t[0])):
        if not work.has_node(m_stmt.id):
            continue
        _map_pair(p_stmt, work.node(m_stmt.id), mapping)

    matched_ids = {p.id for p, _, _ in match_set.pairs}
    adds_by_id = {op.node_id: op for op in pattern.ops if op.op == "add"}
    applied = 0
    skipped = 0
    for op in pattern.ops:
        tid = op_target_id(op, adds_by_id)
        stmt = None
        if tid is not None and pattern.context.has_node(tid):
            stmt = pattern.context.enclosing_statement(
                pattern.context.node(tid))
        if stmt is None or stmt.id not in matched_ids:
            skipped += 1
            continue
        try:
            _apply_op(work, op, mapping)
            applied += 1
        except RemapFailure:
            skipped += 1
    if applied == 0:
        return None

    partial = skipped > 0
    covered = {m.id for _, m, _ in match_set.pairs}
    for site in conflict.sites:
        if site.file != am_file.path:
            partial = True
            continue
        if not am_file.tree.has_node(site.node_id):
            continue
        stmt = am_file.tree.enclosing_statement(
            am_file.tree.node(site.node_id))
        if stmt is None or stmt.id not in covered:
            partial = True

    return Resolution(
        strategy="example",
        conflict=conflict,
        path=am_file.path,
        text=pretty_print(work.root),
        partial=partial,
        source_host=pattern.example.host,
        sigma=match_set.sigma,
        exact=match_set.exact,
    )


def resolve_by_example(fw: FourWayGraph, conflict: Conflict,
                       scenario: MergeScenario) -> Optional[Resolution]:
    if conflict.using_am is None or conflict.using_am.decl is None:
        return None
    path = conflict.sites[0].file
    am_file = scenario.am.get(path)
    if am_file is None:
        return None
    m_tree = SyntaxTree(conflict.using_am.decl)

    cands: list[tuple[TransformationPattern, MatchSet]] = []
    for example in mine_examples(fw, conflict):
        try:
            pattern = infer_pattern(example, conflict)
        except NoRelevantEdit:
            continue
        try:
            match_set = match_context(pattern, m_tree)
        except NoAnchor:
            continue
        cands.append((pattern, match_set))

    for rank, (pattern, match_set) in enumerate(rank_candidates(cands), 1):
        resolution = apply_pattern(pattern, match_set, conflict, am_file)
        if resolution is not None:
            resolution.rank = rank
            return resolution
    return None
