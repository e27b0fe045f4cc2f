"""Entity graph matching and deltas.

Matching runs in two phases: exact (kind, fqn) identity, then a similarity
sweep that only pairs entities whose parents are already matched, so a member
moved across types shows up as delete plus add rather than a match.  The
similarity score averages trigram similarity of the printed declaration and
of the sorted neighbor fqns; pairs below 0.618 stay unmatched.

A delta lists entity edits (add, delete, update with a rename,
signature-change or body-change detail) and relation edits computed modulo
the entity match.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .merge3 import MergeScenario
from .peg import Entity, EntityGraph, build_peg
from .similarity import trigram_similarity

MATCH_THRESHOLD = 0.618


@dataclass
class EntityEdit:
    op: str                     # add | delete | update
    branch: str                 # l | r
    kind: str                   # entity kind
    old_fqn: Optional[str]
    new_fqn: Optional[str]
    detail: Optional[str] = None  # rename | signature-change | body-change
    old: Optional[Entity] = None
    new: Optional[Entity] = None

    @property
    def subject(self) -> str:
        return self.new_fqn if self.old_fqn is None else self.old_fqn

    def __repr__(self) -> str:  # pragma: no cover
        tail = f" {self.detail}" if self.detail else ""
        if self.op == "update" and self.old_fqn != self.new_fqn:
            return f"<{self.op}{tail} {self.kind} {self.old_fqn} -> {self.new_fqn}>"
        return f"<{self.op}{tail} {self.kind} {self.subject}>"


@dataclass
class RelationEdit:
    op: str                     # add | delete
    branch: str
    kind: str                   # relation kind
    src_fqn: str
    dst_fqn: str
    src: Optional[Entity] = None
    dst: Optional[Entity] = None

    def __repr__(self) -> str:  # pragma: no cover
        return f"<{self.op} {self.kind} {self.src_fqn} -> {self.dst_fqn}>"


@dataclass
class GraphDelta:
    branch: str
    base: EntityGraph
    target: EntityGraph
    matches: dict[str, str]             # base entity id -> target entity id
    entity_edits: list[EntityEdit] = field(default_factory=list)
    relation_edits: list[RelationEdit] = field(default_factory=list)

    def inverse_matches(self) -> dict[str, str]:
        return {v: k for k, v in self.matches.items()}


def _parent_id(graph: EntityGraph, entity: Entity) -> Optional[str]:
    parent = graph.parent_of(entity)
    return parent.id if parent is not None else None


_PHASE2_ORDER = {
    "project": 0, "package": 1, "compilation-unit": 2,
    "class": 3, "interface": 3, "enum": 3,
    "field": 4, "method": 4, "constructor": 4, "enum-constant": 4,
}


def match_graphs(ga: EntityGraph, gb: EntityGraph) -> dict[str, str]:
    """Correspondence between two graphs as a dict of entity ids."""
    matches: dict[str, str] = {}
    taken: set[str] = set()
    for eid in ga.entities:
        if eid in gb.entities:
            matches[eid] = eid
            taken.add(eid)

    # similarity phase, repeated until stable so a matched parent can unlock
    # the pairing of its renamed children
    while True:
        candidates = []
        for eid, ent in ga.entities.items():
            if eid in matches:
                continue
            pid = _parent_id(ga, ent)
            if pid is not None and pid not in matches:
                continue
            want_parent = matches.get(pid) if pid is not None else None
            for oid, other in gb.entities.items():
                if oid in taken or other.kind != ent.kind:
                    continue
                if _parent_id(gb, other) != want_parent:
                    continue
                sim = 0.5 * trigram_similarity(ga.body_text(ent),
                                               gb.body_text(other)) \
                    + 0.5 * trigram_similarity(ga.context_string(ent),
                                               gb.context_string(other))
                if sim >= MATCH_THRESHOLD:
                    candidates.append((sim, ent, other))
        if not candidates:
            return matches
        candidates.sort(key=lambda c: (-c[0], _PHASE2_ORDER[c[1].kind],
                                       c[1].fqn, c[2].fqn))
        progressed = False
        for _sim, ent, other in candidates:
            if ent.id in matches or other.id in taken:
                continue
            matches[ent.id] = other.id
            taken.add(other.id)
            progressed = True
        if not progressed:
            return matches


def _update_detail(old: Entity, new: Entity, base: EntityGraph,
                   target: EntityGraph) -> Optional[str]:
    if old.fqn != new.fqn:
        if old.simple_name != new.simple_name:
            return "rename"
        if old.param_sig != new.param_sig:
            return "signature-change"
        return "rename"
    if base.body_text(old) != target.body_text(new):
        return "body-change"
    return None


def diff_graphs(base: EntityGraph, target: EntityGraph,
                branch: str) -> GraphDelta:
    matches = match_graphs(base, target)
    inverse = {v: k for k, v in matches.items()}
    delta = GraphDelta(branch=branch, base=base, target=target, matches=matches)

    for eid in sorted(base.entities, key=lambda i: base.entities[i].fqn):
        ent = base.entities[eid]
        if eid not in matches:
            delta.entity_edits.append(EntityEdit(
                "delete", branch, ent.kind, ent.fqn, None, old=ent))
            continue
        other = target.entities[matches[eid]]
        detail = _update_detail(ent, other, base, target)
        if detail is not None:
            delta.entity_edits.append(EntityEdit(
                "update", branch, ent.kind, ent.fqn, other.fqn,
                detail=detail, old=ent, new=other))
    for oid in sorted(target.entities, key=lambda i: target.entities[i].fqn):
        if oid not in inverse:
            other = target.entities[oid]
            delta.entity_edits.append(EntityEdit(
                "add", branch, other.kind, None, other.fqn, new=other))

    for rel in sorted(base.relations, key=lambda r: (r.src, r.kind, r.dst)):
        if rel.src not in matches:
            continue
        src, dst = base.by_id(rel.src), base.by_id(rel.dst)
        if rel.dst in matches:
            mapped = (matches[rel.src], matches[rel.dst])
            if any(r.src == mapped[0] and r.dst == mapped[1]
                   and r.kind == rel.kind for r in target.relations):
                continue
        delta.relation_edits.append(RelationEdit(
            "delete", branch, rel.kind, src.fqn, dst.fqn, src=src, dst=dst))
    for rel in sorted(target.relations, key=lambda r: (r.src, r.kind, r.dst)):
        src, dst = target.by_id(rel.src), target.by_id(rel.dst)
        if rel.src in inverse and rel.dst in inverse:
            mapped = (inverse[rel.src], inverse[rel.dst])
            if any(r.src == mapped[0] and r.dst == mapped[1]
                   and r.kind == rel.kind for r in base.relations):
                continue
        delta.relation_edits.append(RelationEdit(
            "add", branch, rel.kind, src.fqn, dst.fqn, src=src, dst=dst))
    return delta


@dataclass
class FourWayGraph:
    base: EntityGraph
    left: EntityGraph
    right: EntityGraph
    merged: EntityGraph
    delta_left: GraphDelta
    delta_right: GraphDelta
    cap_left: dict[str, str]    # merged entity id -> left entity id
    cap_right: dict[str, str]


def build_fourway(scenario: MergeScenario) -> FourWayGraph:
    gb = build_peg(scenario.base, "b")
    gl = build_peg(scenario.left, "l")
    gr = build_peg(scenario.right, "r")
    gam = build_peg(scenario.am, "am")
    return FourWayGraph(
        base=gb, left=gl, right=gr, merged=gam,
        delta_left=diff_graphs(gb, gl, "l"),
        delta_right=diff_graphs(gb, gr, "r"),
        cap_left=match_graphs(gam, gl),
        cap_right=match_graphs(gam, gr),
    )


def merged_entity_for(fw: FourWayGraph, branch: str,
                      branch_entity: Entity) -> Optional[Entity]:
    """The merged-graph entity matched with an l or r entity, if any."""
    cap = fw.cap_left if branch == "l" else fw.cap_right
    for am_id, branch_id in cap.items():
        if branch_id == branch_entity.id:
            return fw.merged.by_id(am_id)
    return None
