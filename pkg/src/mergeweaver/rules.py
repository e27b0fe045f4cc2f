"""Fixed resolution transforms, one per covered conflict type.

Each handler rewrites a clone of the merged file in place, addressing the
conflict's recorded site nodes by id.  Types C17 through C23 have no safe
fixed transform and raise NotCovered; the example-based strategy is the
only automated option for those.
"""

from __future__ import annotations

import re
from typing import Callable, Optional

from .conflicts import (Conflict, declared_type_node, declared_type_text,
                        find_decl_method, _interface_return_for)
from .graph_diff import EntityEdit, FourWayGraph, RelationEdit
from .matching import Resolution
from .merge3 import MergeScenario
from .printer import pretty_print
from .syntax import SourceFile, SyntaxNode, SyntaxTree, clone_node

_IDENT = re.compile(r"[A-Za-z_$][A-Za-z0-9_$]*")


class NotCovered(Exception):
    """The conflict type has no fixed transform."""


class TargetMissing(Exception):
    """A site or declaration the transform needs is not in the tree."""


def _subst_word(text: str, old: str, new: str) -> str:
    return _IDENT.sub(lambda m: new if m.group(0) == old else m.group(0),
                      text)


def _site_nodes(work: SyntaxTree,
                conflict: Conflict) -> list[tuple]:
    out = []
    for site in conflict.sites:
        if not work.has_node(site.node_id):
            raise TargetMissing(f"site node {site.node_id} is gone")
        out.append((site, work.node(site.node_id)))
    return out


def _remove_node(work: SyntaxTree, node: SyntaxNode) -> None:
    parent = work.parent(node)
    if parent is None:
        raise TargetMissing("cannot remove the file root")
    parent.children.remove(node)
    work.reindex()


def _fresh_clone(work: SyntaxTree, node: SyntaxNode) -> SyntaxNode:
    copy = clone_node(node)
    for n in copy.walk():
        n.id = work.fresh_id()
        n.span = None
    return copy


# ---------------------------------------------------------------------------
# handlers


def _update_added_type_use(work: SyntaxTree, conflict: Conflict,
                           fw: FourWayGraph) -> None:
    d = conflict.def_change
    assert isinstance(d, EntityEdit) and d.old is not None \
        and d.new is not None
    old_s, new_s = d.old.simple_name, d.new.simple_name
    for _site, node in _site_nodes(work, conflict):
        if node.kind == "TypeRef":
            node.value = _subst_word(node.value, old_s, new_s)
        elif node.kind == "Name":
            if node.value == old_s:
                node.value = new_s
        elif node.kind == "ImportDecl":
            if node.value == d.old_fqn:
                node.value = d.new_fqn or node.value
            elif node.value.endswith("." + old_s):
                node.value = node.value[:-len(old_s)] + new_s
        else:
            raise TargetMissing(f"unexpected site kind {node.kind}")


def _update_added_package_use(work: SyntaxTree, conflict: Conflict,
                              fw: FourWayGraph) -> None:
    d = conflict.def_change
    assert isinstance(d, EntityEdit)
    old_pkg, new_pkg = d.old_fqn or "", d.new_fqn or ""
    for _site, node in _site_nodes(work, conflict):
        if node.kind != "ImportDecl":
            raise TargetMissing(f"unexpected site kind {node.kind}")
        if node.value.startswith(old_pkg + "."):
            node.value = new_pkg + node.value[len(old_pkg):]


def _update_added_field_use(work: SyntaxTree, conflict: Conflict,
                            fw: FourWayGraph) -> None:
    d = conflict.def_change
    assert isinstance(d, EntityEdit) and d.new is not None
    for _site, node in _site_nodes(work, conflict):
        node.value = d.new.simple_name


def _update_added_call(work: SyntaxTree, conflict: Conflict,
                       fw: FourWayGraph) -> None:
    d = conflict.def_change
    assert isinstance(d, EntityEdit) and d.new is not None
    for _site, node in _site_nodes(work, conflict):
        if node.kind != "MethodInvocation":
            raise TargetMissing(f"unexpected site kind {node.kind}")
        node.value = d.new.simple_name


def _match_super_return(work: SyntaxTree, conflict: Conflict,
                        fw: FourWayGraph) -> None:
    d = conflict.def_change
    assert isinstance(d, EntityEdit) and d.new is not None \
        and d.new.decl is not None
    want = declared_type_text(d.new.decl)
    if not want:
        raise TargetMissing("superclass method has no return type")
    for _site, node in _site_nodes(work, conflict):
        ret = declared_type_node(node)
        if ret is None:
            raise TargetMissing("site method has no return type")
        ret.value = want


def _match_super_params(work: SyntaxTree, conflict: Conflict,
                        fw: FourWayGraph) -> None:
    d = conflict.def_change
    assert isinstance(d, EntityEdit) and d.new is not None \
        and d.new.decl is not None
    new_params = [c for c in d.new.decl.children if c.kind == "Parameter"]
    for _site, node in _site_nodes(work, conflict):
        if node.kind not in ("MethodDecl", "ConstructorDecl"):
            raise TargetMissing(f"unexpected site kind {node.kind}")
        old_idx = [i for i, c in enumerate(node.children)
                   if c.kind == "Parameter"]
        if old_idx:
            insert_at = old_idx[0]
        else:
            ret = declared_type_node(node)
            insert_at = node.children.index(ret) + 1 if ret is not None \
                else len(node.children)
        for i in reversed(old_idx):
            del node.children[i]
        for off, param in enumerate(new_params):
            node.children.insert(insert_at + off, _fresh_clone(work, param))
    work.reindex()


def _readd_import(work: SyntaxTree, conflict: Conflict,
                  fw: FourWayGraph) -> None:
    d = conflict.def_change
    assert isinstance(d, RelationEdit)
    root = work.root
    if root.kind != "CompilationUnit":
        raise TargetMissing("file root is not a compilation unit")
    insert_at = 0
    for i, child in enumerate(root.children):
        if child.kind in ("PackageDecl", "ImportDecl"):
            insert_at = i + 1
    imp = SyntaxNode(kind="ImportDecl", value=d.dst_fqn, children=[],
                     span=None, id=work.fresh_id())
    root.children.insert(insert_at, imp)
    work.reindex()


_STUB_RETURNS = {
    "boolean": "false",
    "byte": "0", "short": "0", "int": "0", "long": "0", "char": "0",
    "float": "0", "double": "0",
}


def _override_new_super_method(work: SyntaxTree, conflict: Conflict,
                               fw: FourWayGraph) -> None:
    d = conflict.def_change
    assert isinstance(d, EntityEdit) and d.new is not None \
        and d.new.decl is not None
    for _site, node in _site_nodes(work, conflict):
        if node.kind not in ("ClassDecl", "EnumDecl"):
            raise TargetMissing(f"unexpected site kind {node.kind}")
        method = _fresh_clone(work, d.new.decl)
        if not any(c.kind == "Modifier" and c.value == "public"
                   for c in method.children):
            method.children.insert(0, SyntaxNode(
                kind="Modifier", value="public", children=[], span=None,
                id=work.fresh_id()))
        if not any(c.kind == "Block" for c in method.children):
            body = SyntaxNode(kind="Block", value="", children=[],
                              span=None, id=work.fresh_id())
            ret = declared_type_text(method)
            if ret != "void":
                lit = SyntaxNode(kind="Literal",
                                 value=_STUB_RETURNS.get(ret, "null"),
                                 children=[], span=None,
                                 id=work.fresh_id())
                stmt = SyntaxNode(kind="ReturnStmt", value="",
                                  children=[lit], span=None,
                                  id=work.fresh_id())
                body.children.append(stmt)
            method.children.append(body)
        node.children.append(method)
    work.reindex()


def _remove_clashing_method(work: SyntaxTree, conflict: Conflict,
                            fw: FourWayGraph) -> None:
    for _site, node in _site_nodes(work, conflict):
        if node.kind not in ("MethodDecl", "ConstructorDecl"):
            raise TargetMissing(f"unexpected site kind {node.kind}")
        _remove_node(work, node)


def _rename_to_super_method(work: SyntaxTree, conflict: Conflict,
                            fw: FourWayGraph) -> None:
    d = conflict.def_change
    assert isinstance(d, EntityEdit) and d.new is not None
    for _site, node in _site_nodes(work, conflict):
        if node.kind != "MethodDecl":
            raise TargetMissing(f"unexpected site kind {node.kind}")
        node.value = d.new.simple_name


def _match_interface_return(work: SyntaxTree, conflict: Conflict,
                            fw: FourWayGraph) -> None:
    d = conflict.def_change
    u = conflict.use_intro
    assert isinstance(d, RelationEdit)
    want = _interface_return_for(
        d.dst, u.new if isinstance(u, EntityEdit) else None)
    if not want:
        raise TargetMissing("interface method return type unknown")
    for _site, node in _site_nodes(work, conflict):
        if node.kind == "TypeRef":
            node.value = want
        else:
            ret = declared_type_node(node)
            if ret is None:
                raise TargetMissing("site method has no return type")
            ret.value = want


def _remove_redundant_def(work: SyntaxTree, conflict: Conflict,
                          fw: FourWayGraph) -> None:
    d = conflict.def_change
    pairs = _site_nodes(work, conflict)
    if len(pairs) < 2:
        raise TargetMissing("no duplicate definition found")
    right_only = []
    for site, node in pairs:
        ent = fw.merged.find(d.kind, site.entity)
        if ent is not None and ent.id in fw.cap_right \
                and ent.id not in fw.cap_left:
            right_only.append((site, node))
    # keep exactly one copy: prefer dropping the one only the right branch
    # contributed, otherwise the later of the duplicates
    pool = right_only if right_only else pairs
    victim = max(pool, key=lambda p: p[0].span)[1]
    _remove_node(work, victim)


_Handler = Callable[[SyntaxTree, Conflict, FourWayGraph], None]

RULES: dict[str, tuple[str, _Handler]] = {
    "C1": ("update the added use", _update_added_type_use),
    "C2": ("update the method definition in the subclass to match the "
           "superclass", _match_super_return),
    "C3": ("update the parameter list in the subclass to match the "
           "superclass", _match_super_params),
    "C4": ("update the return type in the subclass to match the "
           "superclass", _match_super_return),
    "C5": ("re-add the removed import", _readd_import),
    "C6": ("update the added use", _update_added_package_use),
    "C7": ("update the added use", _update_added_type_use),
    "C8": ("add a method definition overriding the new interface method",
           _override_new_super_method),
    "C9": ("update the parameter list to match the interface",
           _match_super_params),
    "C10": ("remove the method definition to match the interface",
            _remove_clashing_method),
    "C11": ("rename the method definition to match the interface",
            _rename_to_super_method),
    "C12": ("update the return type to match the interface",
            _match_interface_return),
    "C13": ("update the added use", _update_added_field_use),
    "C14": ("remove the redundant field definition", _remove_redundant_def),
    "C15": ("update the added use", _update_added_call),
    "C16": ("remove the redundant method definition",
            _remove_redundant_def),
}


def resolve_by_rule(fw: FourWayGraph, conflict: Conflict,
                    scenario: MergeScenario) -> Resolution:
    entry = RULES.get(conflict.type)
    if entry is None:
        raise NotCovered(conflict.type)
    action, handler = entry
    path = conflict.sites[0].file
    am_file: Optional[SourceFile] = scenario.am.get(path)
    if am_file is None:
        raise TargetMissing(f"no merged file at {path}")
    work = SyntaxTree(clone_node(am_file.tree.root))
    handler(work, conflict, fw)
    return Resolution(
        strategy="rule",
        conflict=conflict,
        path=path,
        text=pretty_print(work.root),
        partial=False,
        rule=action,
    )
