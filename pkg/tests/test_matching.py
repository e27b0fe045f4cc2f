"""Context matching, candidate ranking, pattern application."""

import dataclasses
import random

import pytest

from conftest import parse_snippet, run_corpus
from mergeweaver.inference import infer_pattern
from mergeweaver.matching import (ANCHOR_THRESHOLD, SIM_THRESHOLD, MatchSet,
                                  NoAnchor, match_context, rank_candidates,
                                  resolve_by_example, score_statement_match)
from mergeweaver.mining import mine_examples
from mergeweaver.printer import statement_header_text


def motivating_pattern():
    run = run_corpus("serializer-rename")
    (conflict,) = run.report.conflicts
    ex = next(e for e in mine_examples(run.fourway, conflict)
              if e.host.endswith("handleSerializers(Node)"))
    return run, conflict, infer_pattern(ex, conflict)


def stmt_from(text: str):
    tree = parse_snippet(f"class T {{ void m() {{ {text} }} }}").tree
    return next(n for n in tree.nodes()
                if n.kind in ("ExprStmt", "LocalVarDecl", "IfStmt",
                              "ReturnStmt"))


def test_score_identical_statement_is_two():
    a = stmt_from("emit(total);")
    b = stmt_from("emit(total);")
    assert score_statement_match(a, b) == 2.0


def test_score_same_kind_dissimilar_text_is_one():
    a = stmt_from("emit(total);")
    b = stmt_from("refresh(cursor, label, 99);")
    assert score_statement_match(a, b) == 1.0


def test_score_near_miss_adds_similarity():
    a = stmt_from('if ("type-serializer".equals(name)) { emit(1); }')
    b = stmt_from('if ("type-serializer".equals(name2)) { emit(1); }')
    score = score_statement_match(a, b)
    assert 1.0 + SIM_THRESHOLD < score < 2.0


def test_score_kind_mismatch_gets_no_kind_point():
    a = stmt_from("emit(total);")
    b = stmt_from("int left = emit(total);")
    assert score_statement_match(a, b) < 2.0


def test_motivating_match_set():
    run, conflict, pattern = motivating_pattern()
    am = run.scenario.am["XmlClientConfigBuilder.java"]
    ms = match_context(pattern, am.tree)
    assert ms.exact == 4
    assert len(ms.pairs) == 5
    assert ms.sigma == pytest.approx(9.947368421052632)
    p_anchor, m_anchor = ms.anchor
    assert statement_header_text(p_anchor) \
        == "addTypeSerializer(serializerConfig);"
    assert statement_header_text(m_anchor) \
        == "addTypeSerializer(serializerConfig);"
    scores = sorted(sc for _, _, sc in ms.pairs)
    assert scores[-4:] == [2.0, 2.0, 2.0, 2.0]


def test_no_anchor_when_nothing_clears_threshold():
    _, _, pattern = motivating_pattern()
    stranger = parse_snippet("""\
class Other {
    void unrelated() {
        int count = 1;
        count = count + 1;
    }
}
""").tree
    with pytest.raises(NoAnchor):
        match_context(pattern, stranger)
    assert ANCHOR_THRESHOLD == pytest.approx(1.618)


def candidates_with(*rows):
    """rows: (sigma, exact, host) with a shared real pattern."""
    _, _, pattern = motivating_pattern()
    out = []
    for sigma, exact, host in rows:
        example = dataclasses.replace(pattern.example, host=host)
        pat = dataclasses.replace(pattern, example=example)
        out.append((pat, MatchSet(pairs=[], sigma=sigma, exact=exact)))
    return out


def test_rank_highest_sigma_wins():
    cands = candidates_with((3.0, 1, "z.Z.a()"), (5.0, 0, "a.A.a()"),
                            (4.0, 2, "m.M.a()"))
    ranked = rank_candidates(cands)
    assert [c[1].sigma for c in ranked] == [5.0, 4.0, 3.0]


def test_rank_breaks_sigma_tie_by_exact_then_host():
    cands = candidates_with((4.0, 1, "b.B.m()"), (4.0, 2, "c.C.m()"),
                            (4.0, 2, "a.A.m()"))
    ranked = rank_candidates(cands)
    heads = [(c[1].exact, c[0].example.host) for c in ranked]
    assert heads == [(2, "a.A.m()"), (2, "c.C.m()"), (1, "b.B.m()")]


def test_rank_argmax_is_permutation_invariant():
    cands = candidates_with(
        (6.0, 3, "d.D.m()"), (5.5, 4, "a.A.m()"), (6.0, 2, "e.E.m()"),
        (4.0, 9, "b.B.m()"), (6.0, 3, "c.C.m()"))
    rng = random.Random(7)
    first = rank_candidates(list(cands))[0]
    for _ in range(100):
        shuffled = list(cands)
        rng.shuffle(shuffled)
        top = rank_candidates(shuffled)[0]
        assert top[1].sigma == first[1].sigma
        assert top[1].exact == first[1].exact
        assert top[0].example.host == first[0].example.host
    assert first[0].example.host == "c.C.m()"


def test_resolve_by_example_end_to_end():
    run, conflict, _ = motivating_pattern()
    res = resolve_by_example(run.fourway, conflict, run.scenario)
    assert res is not None
    assert res.strategy == "example"
    assert res.rank == 1
    assert res.partial is False
    assert "SerializerConfig serializer = new SerializerConfig();" in res.text
    assert "addSerializerConfig(serializer);" in res.text
    # untouched sibling methods survive application verbatim
    assert "private void addTypeSerializer(TypeSerializerConfig" in res.text


def test_partial_application_rewrites_first_use_only():
    run = run_corpus("serialization-service-moved")
    (conflict,) = run.report.conflicts
    res = resolve_by_example(run.fourway, conflict, run.scenario)
    assert res is not None and res.partial is True
    assert res.sigma == pytest.approx(2.0)
    assert res.exact == 1
    body = res.text
    assert "getContext().getSerializationService().toData(key)" in body
    # second call in the same method keeps its old shape
    assert "Data valueData = getSerializationService().toData(value);" in body


def test_no_candidates_returns_none():
    run = run_corpus("callback-ref-rename")
    (conflict,) = run.report.conflicts
    assert resolve_by_example(run.fourway, conflict, run.scenario) is None
