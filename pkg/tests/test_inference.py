"""Pattern inference: use discovery, dependence closure, pruning."""

import pytest

from conftest import brute_force_closure, run_corpus
from mergeweaver.inference import (NoRelevantEdit, infer_pattern,
                                   refine_edits, use_node_ids)
from mergeweaver.mining import mine_examples
from mergeweaver.printer import pretty_print, statement_header_text


def mined(name: str, host_suffix: str = ""):
    run = run_corpus(name)
    (conflict,) = run.report.conflicts
    examples = mine_examples(run.fourway, conflict)
    if host_suffix:
        examples = [e for e in examples if e.host.endswith(host_suffix)]
    assert examples, f"no mined example in {name}"
    return conflict, examples[0]


def test_use_nodes_for_class_subject():
    conflict, ex = mined("serializer-rename", "handleSerializers(Node)")
    uses = use_node_ids(ex.before, conflict)
    shapes = sorted((ex.before.node(i).kind, ex.before.node(i).value)
                    for i in uses)
    assert shapes == [
        ("LocalVarDecl", "serializerConfig"),
        ("Name", "serializerConfig"),
        ("Name", "serializerConfig"),
        ("Name", "serializerConfig"),
        ("TypeRef", "TypeSerializerConfig"),
        ("TypeRef", "TypeSerializerConfig"),
    ]


def test_use_nodes_for_field_subject():
    conflict, ex = mined("cluster-field-removed")
    uses = use_node_ids(ex.before, conflict)
    assert uses
    for i in uses:
        node = ex.before.node(i)
        assert node.kind in ("Name", "FieldAccess")
        assert node.value == "timeout"


def test_use_nodes_for_constructor_subject():
    conflict, ex = mined("client-ctor-params")
    uses = use_node_ids(ex.before, conflict)
    kinds = {ex.before.node(i).kind for i in uses}
    assert "ObjectCreation" in kinds
    # the argument list and type name of the creation count as uses too,
    # so an inserted argument still targets a use node
    assert "ArgumentList" in kinds


def test_use_nodes_for_method_subject():
    conflict, ex = mined("serialization-service-moved")
    uses = use_node_ids(ex.before, conflict)
    kinds = {ex.before.node(i).kind for i in uses}
    assert "MethodInvocation" in kinds
    named = {ex.before.node(i).value
             for i in uses if ex.before.node(i).kind == "MethodInvocation"}
    assert named == {"getSerializationService"}


def test_motivating_closure_is_the_five_statements():
    conflict, ex = mined("serializer-rename", "handleSerializers(Node)")
    kept, closure, critical = refine_edits(ex, conflict)
    headers = sorted(statement_header_text(ex.before.node(s))
                     for s in closure)
    assert headers == sorted([
        '"type-serializer".equals(name)',
        "TypeSerializerConfig serializerConfig = new TypeSerializerConfig();",
        'serializerConfig.setClassName(getAttribute(child, "class-name"));',
        "serializerConfig.setTypeClassName(typeClassName);",
        "addTypeSerializer(serializerConfig);",
    ])
    # the unrelated local declaration between the setters stays out
    for sid in closure:
        assert "typeClassName = getAttribute" \
            not in statement_header_text(ex.before.node(sid))
    assert critical <= use_node_ids(ex.before, conflict)
    assert len(kept) == 8


def test_motivating_context_is_pruned_if_statement():
    conflict, ex = mined("serializer-rename", "handleSerializers(Node)")
    pattern = infer_pattern(ex, conflict)
    text = pretty_print(pattern.context)
    assert text == """\
if ("type-serializer".equals(name)) {
    TypeSerializerConfig serializerConfig = new TypeSerializerConfig();
    serializerConfig.setClassName(getAttribute(child, "class-name"));
    serializerConfig.setTypeClassName(typeClassName);
    addTypeSerializer(serializerConfig);
}
"""


def test_pattern_invariants():
    for name in ("serializer-rename", "cluster-field-removed",
                 "client-ctor-params", "serialization-service-moved"):
        conflict, ex = mined(name)
        try:
            pattern = infer_pattern(ex, conflict)
        except NoRelevantEdit:
            continue
        ctx_ids = {n.id for n in pattern.context.nodes()}
        assert pattern.critical_ids <= ctx_ids
        assert pattern.critical_ids
        for op in pattern.ops:
            assert op.op == "add" or op.node_id in ctx_ids


def test_closure_matches_brute_force_on_all_mined_examples():
    scenarios = ("serializer-rename", "cluster-field-removed",
                 "client-ctor-params", "serialization-service-moved",
                 "tax-c19", "tax-c20", "tax-c21", "tax-c22", "tax-c23",
                 "tax-c15", "tax-c17")
    checked = 0
    for name in scenarios:
        run = run_corpus(name)
        for conflict in run.report.conflicts:
            for ex in mine_examples(run.fourway, conflict):
                uses = use_node_ids(ex.before, conflict)
                try:
                    _, closure, _ = refine_edits(ex, conflict)
                except NoRelevantEdit:
                    continue
                assert closure == brute_force_closure(
                    ex.before, list(ex.script), uses), (name, ex.host)
                checked += 1
    assert checked >= 8


def test_unrelated_script_raises_no_relevant_edit():
    # an example about one subject cannot be refined against a conflict
    # over a different subject
    _, ex = mined("serializer-rename", "handleSerializers(Node)")
    other_conflict = run_corpus("tax-c15").report.conflicts[0]
    with pytest.raises(NoRelevantEdit):
        refine_edits(ex, other_conflict)
