"""Three-way text merge: laws on disjoint edits, conflicts, file sets."""

import random

import pytest

from conftest import CORPUS, random_disjoint_triple
from mergeweaver.merge3 import (TextualConflict, merge_file, merge_scenario,
                                merge_texts)

BASE = "a\nb\nc\nd\ne\n"


def test_left_only_change_wins():
    left = "a\nB\nc\nd\ne\n"
    assert merge_file(BASE, left, BASE) == left


def test_right_only_change_wins():
    right = "a\nb\nc\nD\ne\n"
    assert merge_file(BASE, BASE, right) == right


def test_disjoint_changes_combine():
    left = "a\nB\nc\nd\ne\n"
    right = "a\nb\nc\nD\ne\n"
    assert merge_file(BASE, left, right) == "a\nB\nc\nD\ne\n"


def test_identical_competing_change_is_clean():
    both = "a\nB\nc\nd\ne\n"
    assert merge_file(BASE, both, both) == both


def test_overlap_raises():
    with pytest.raises(TextualConflict):
        merge_file(BASE, "a\nB1\nc\nd\ne\n", "a\nB2\nc\nd\ne\n")


def test_delete_vs_edit_same_line_raises():
    left = "a\nc\nd\ne\n"
    right = "a\nB2\nc\nd\ne\n"
    with pytest.raises(TextualConflict):
        merge_file(BASE, left, right)


def test_laws_on_random_disjoint_triples():
    for seed in range(60):
        rng = random.Random(seed)
        b, l, r = random_disjoint_triple(rng)
        assert merge_file(b, l, b) == l
        assert merge_file(b, b, r) == r
        assert merge_file(b, l, l) == l
        merged = merge_file(b, l, r)
        # every line someone wrote and nobody removed survives
        for line in merged.splitlines():
            assert (line in b.splitlines() or line in l.splitlines()
                    or line in r.splitlines())


def test_merge_texts_file_add_and_delete():
    base = {"A.java": "x\n", "B.java": "y\n"}
    left = {"A.java": "x\n"}                       # left deletes B
    right = {"A.java": "x\n", "B.java": "y\n", "C.java": "z\n"}
    merged = merge_texts(base, left, right)
    assert sorted(merged) == ["A.java", "C.java"]
    assert merged["C.java"] == "z\n"


def test_merge_texts_both_add_same_file_identical():
    base = {}
    left = {"N.java": "n\n"}
    right = {"N.java": "n\n"}
    assert merge_texts(base, left, right) == {"N.java": "n\n"}


def test_merge_texts_both_add_same_file_different_raises():
    with pytest.raises(TextualConflict):
        merge_texts({}, {"N.java": "n1\n"}, {"N.java": "n2\n"})


def test_delete_vs_modify_file_raises():
    base = {"A.java": "old\n"}
    with pytest.raises(TextualConflict):
        merge_texts(base, {}, {"A.java": "new\n"})


def test_merge_scenario_reads_and_parses_trees():
    d = CORPUS / "serializer-rename"
    scn = merge_scenario(d / "base", d / "left", d / "right")
    assert "XmlClientConfigBuilder.java" in scn.am
    assert "SerializerConfig.java" in scn.am          # left rename wins
    assert "TypeSerializerConfig.java" not in scn.am
    sf = scn.am["XmlClientConfigBuilder.java"]
    assert sf.tree.root.kind == "CompilationUnit"
    assert sf.path == "XmlClientConfigBuilder.java"
    # base/left/right trees are kept for graph building
    assert set(scn.base) == {"TypeSerializerConfig.java",
                             "XmlConfigBuilder.java"}
