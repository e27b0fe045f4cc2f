"""Refining a mined example into a transformation pattern.

An example's edit script usually mixes the adaptation of interest with
unrelated edits made in the same commit.  Refinement keeps the ops that
touch a use of the changed definition, widens over ops sharing a statement
with those, then closes over control and data dependences between edited
statements.  The pattern is the pruned before-side context around the kept
ops plus the ops themselves, with the use sites marked critical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .conflicts import Conflict
from .graph_diff import EntityEdit, RelationEdit
from .peg import arity_of, type_base_name
from .syntax import (STATEMENT_KINDS, SyntaxNode, SyntaxTree, clone_node,
                     preorder)
from .tree_diff import EditOp, EditScript

_LOOP_OR_BRANCH = ("IfStmt", "ForStmt", "ForEachStmt", "WhileStmt")


class NoRelevantEdit(Exception):
    """No op in the example touches a use of the changed definition."""


@dataclass
class TransformationPattern:
    context: SyntaxTree         # pruned before-side subtree, original ids
    ops: list[EditOp]           # refined ops, targets valid in context
    critical_ids: set[int]      # use-of-definition nodes inside context
    example: "EditExample"      # noqa: F821  (mining imports this module's user)

    def __repr__(self) -> str:  # pragma: no cover
        return (f"<pattern {self.example.host} ops={len(self.ops)}"
                f" critical={sorted(self.critical_ids)}>")


# ---------------------------------------------------------------------------
# identifying uses of the changed definition in the before tree


def _arg_count(node: SyntaxNode) -> int:
    for c in node.children:
        if c.kind == "ArgumentList":
            return len(c.children)
    return 0


def _subject_facts(conflict: Conflict) -> Optional[tuple[str, str, Optional[int]]]:
    """(kind, simple name, arity) of the definition whose uses matter."""
    d = conflict.def_change
    if isinstance(d, RelationEdit):
        if d.kind == "imports" and d.dst is not None:
            return "class", d.dst.simple_name, None
        return None
    assert isinstance(d, EntityEdit)
    ent = d.old if d.old is not None else d.new
    if ent is None:
        return None
    if d.kind in ("class", "interface", "enum"):
        return "class", ent.simple_name, None
    if d.kind in ("method", "constructor", "field"):
        arity = arity_of(ent) if d.kind != "field" else None
        return d.kind, ent.simple_name, arity
    return None


def use_node_ids(before: SyntaxTree, conflict: Conflict) -> set[int]:
    """Ids of nodes in the before tree that use the changed definition."""
    facts = _subject_facts(conflict)
    if facts is None:
        return set()
    kind, name, arity = facts
    ids: set[int] = set()

    if kind == "field":
        for n in before.nodes():
            if n.kind in ("Name", "FieldAccess") and n.value == name:
                ids.add(n.id)
        return ids

    if kind == "method":
        for n in before.nodes():
            if n.kind == "MethodInvocation" and n.value == name \
                    and (arity is None or _arg_count(n) == arity):
                ids.add(n.id)
                ids.update(c.id for c in n.children
                           if c.kind == "ArgumentList")
        return ids

    if kind == "constructor":
        for n in before.nodes():
            if n.kind != "ObjectCreation":
                continue
            tref = next((c for c in n.children if c.kind == "TypeRef"), None)
            if tref is None or type_base_name(tref.value) != name:
                continue
            if arity is not None and _arg_count(n) != arity:
                continue
            ids.add(n.id)
            ids.update(c.id for c in n.children
                       if c.kind in ("TypeRef", "ArgumentList"))
        return ids

    # class subject: type references, plus every mention of a variable
    # declared with that type
    typed_vars: set[str] = set()
    for n in before.nodes():
        if n.kind in ("LocalVarDecl", "Parameter"):
            tref = next((c for c in n.children if c.kind == "TypeRef"), None)
            if tref is not None and type_base_name(tref.value) == name:
                typed_vars.add(n.value)
                ids.add(n.id)
    for n in before.nodes():
        if n.kind == "TypeRef" and type_base_name(n.value) == name:
            ids.add(n.id)
        elif n.kind == "Name" and (n.value == name or n.value in typed_vars):
            ids.add(n.id)
        elif n.kind == "FieldAccess" and n.value in typed_vars:
            ids.add(n.id)
    return ids


# ---------------------------------------------------------------------------
# op targets and governing statements


def op_target_id(op: EditOp, adds_by_id: dict[int, EditOp]) -> Optional[int]:
    """Before-tree anchor of an op, lifting adds through pending adds."""
    if op.op != "add":
        return op.node_id
    pid = op.parent_id
    while pid is not None and pid in adds_by_id:
        pid = adds_by_id[pid].parent_id
    return pid


def _governing_stmt(before: SyntaxTree, target_id: Optional[int]
                    ) -> Optional[SyntaxNode]:
    if target_id is None or not before.has_node(target_id):
        return None
    return before.enclosing_statement(before.node(target_id))


# ---------------------------------------------------------------------------
# dependence closure


def _defined_vars(stmt: SyntaxNode) -> set[str]:
    out: set[str] = set()
    for n in preorder(stmt):
        if n.kind == "LocalVarDecl":
            out.add(n.value)
        elif n.kind == "Assignment" and n.children \
                and n.children[0].kind == "Name":
            out.add(n.children[0].value)
    return out


def _used_vars(stmt: SyntaxNode) -> set[str]:
    out: set[str] = set()
    for n in preorder(stmt):
        if n.kind == "Name":
            out.add(n.value)
        elif n.kind == "FieldAccess":
            out.add(n.value)
    return out


def _control_owner(before: SyntaxTree,
                   stmt: SyntaxNode) -> Optional[SyntaxNode]:
    for anc in before.ancestors(stmt):
        if anc.kind in _LOOP_OR_BRANCH:
            return anc
    return None


def refine_edits(example: "EditExample", conflict: Conflict
                 ) -> tuple[list[EditOp], set[int], set[int]]:
    """(kept ops, closure statement ids, critical node ids).

    Raises NoRelevantEdit when no op touches a use of the definition.
    """
    before = example.before
    script = example.script
    adds_by_id = {op.node_id: op for op in script if op.op == "add"}
    use_ids = use_node_ids(before, conflict)

    targets = {id(op): op_target_id(op, adds_by_id) for op in script}
    core = [op for op in script
            if targets[id(op)] is not None and targets[id(op)] in use_ids]
    if not core:
        raise NoRelevantEdit(example.host)
    critical = {targets[id(op)] for op in core}

    stmt_of: dict[int, Optional[SyntaxNode]] = {
        id(op): _governing_stmt(before, targets[id(op)]) for op in script}
    edited: dict[int, SyntaxNode] = {}
    for op in script:
        stmt = stmt_of[id(op)]
        if stmt is not None:
            edited[stmt.id] = stmt

    closure: set[int] = {stmt_of[id(op)].id for op in core
                         if stmt_of[id(op)] is not None}
    order = {n.id: i for i, n in enumerate(before.nodes())}
    changed = True
    while changed:
        changed = False
        for sid in sorted(closure):
            stmt = before.node(sid)
            owner = _control_owner(before, stmt)
            if owner is not None and owner.id in edited \
                    and owner.id not in closure:
                closure.add(owner.id)
                changed = True
            used = _used_vars(stmt)
            for oid, other in edited.items():
                if oid in closure or order[oid] >= order[sid]:
                    continue
                if _defined_vars(other) & used:
                    closure.add(oid)
                    changed = True

    kept = [op for op in script
            if (stmt_of[id(op)] is not None
                and stmt_of[id(op)].id in closure)
            or (stmt_of[id(op)] is None and op in core)]
    return kept, closure, critical


# ---------------------------------------------------------------------------
# context pruning


def _subtree_ids(node: SyntaxNode) -> set[int]:
    return {n.id for n in preorder(node)}


def refine_context(example: "EditExample", kept: list[EditOp],
                   closure: set[int], critical: set[int]
                   ) -> TransformationPattern:
    before = example.before
    adds_by_id = {op.node_id: op for op in kept if op.op == "add"}
    keep_ids = set(closure) | set(critical)
    for op in kept:
        tid = op_target_id(op, adds_by_id)
        if tid is not None:
            keep_ids.add(tid)

    anchors = [before.node(i) for i in sorted(keep_ids)
               if before.has_node(i)]
    root = _lca(before, anchors)
    stmt = before.enclosing_statement(root)
    if stmt is not None:
        root = stmt

    pruned = clone_node(root)
    _prune(pruned, keep_ids)
    context = SyntaxTree(pruned)

    ctx_ids = {n.id for n in context.nodes()}
    ops = [op for op in kept
           if op.op == "add" or op.node_id in ctx_ids]
    return TransformationPattern(
        context=context,
        ops=ops,
        critical_ids=critical & ctx_ids,
        example=example,
    )


def _lca(tree: SyntaxTree, nodes: list[SyntaxNode]) -> SyntaxNode:
    if not nodes:
        return tree.root
    paths = []
    for n in nodes:
        path = [n] + list(tree.ancestors(n))
        path.reverse()
        paths.append(path)
    shortest = min(len(p) for p in paths)
    lca = paths[0][0]
    for depth in range(shortest):
        first = paths[0][depth]
        if all(p[depth] is first for p in paths):
            lca = first
        else:
            break
    return lca


def _prune(node: SyntaxNode, keep_ids: set[int]) -> None:
    kept_children = []
    for i, child in enumerate(node.children):
        droppable = child.kind in STATEMENT_KINDS \
            or (node.kind == "IfStmt" and i == 2)
        if droppable and not (_subtree_ids(child) & keep_ids):
            continue
        kept_children.append(child)
    node.children = kept_children
    for child in node.children:
        _prune(child, keep_ids)


def infer_pattern(example: "EditExample",
                  conflict: Conflict) -> TransformationPattern:
    kept, closure, critical = refine_edits(example, conflict)
    return refine_context(example, kept, closure, critical)
