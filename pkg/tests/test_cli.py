"""Command line behavior and exit codes."""

import json

import pytest

from conftest import CORPUS
from mergeweaver.cli import main

MOT = CORPUS / "serializer-rename"


def args_for(cmd: str, scenario=MOT, **extra) -> list:
    argv = [cmd, "--base", str(scenario / "base"),
            "--left", str(scenario / "left"),
            "--right", str(scenario / "right")]
    for flag, value in extra.items():
        argv.append(f"--{flag.replace('_', '-')}")
        if value is not True:
            argv.append(str(value))
    return argv


def test_detect_writes_report(tmp_path):
    report = tmp_path / "report.json"
    assert main(args_for("detect", report=report)) == 0
    doc = json.loads(report.read_text())
    assert doc["scenario"] == "serializer-rename"
    assert [c["type"] for c in doc["conflicts"]] == ["C1"]
    assert "timingMs" in doc


def test_detect_stdout_and_no_timing(capsys):
    assert main(args_for("detect", no_timing=True)) == 0
    doc = json.loads(capsys.readouterr().out)
    assert "timingMs" not in doc
    assert doc["conflicts"]


def test_resolve_writes_output_tree(tmp_path):
    out = tmp_path / "out"
    report = tmp_path / "r.json"
    assert main(args_for("resolve", out=out, report=report)) == 0
    assert (out / "am" / "XmlClientConfigBuilder.java").is_file()
    example = out / "example" / "conflict-0" / "XmlClientConfigBuilder.java"
    rule = out / "rule" / "conflict-0" / "XmlClientConfigBuilder.java"
    assert example.is_file() and rule.is_file()
    assert example.with_name(example.name + ".diff").read_text() \
        .startswith("--- am/")
    assert "SerializerConfig serializer" in example.read_text()
    doc = json.loads(report.read_text())
    assert {r["strategy"] for r in doc["resolutions"]} == {"example", "rule"}


def test_merge_writes_files(tmp_path):
    out = tmp_path / "merged"
    assert main(args_for("merge", out=out)) == 0
    assert (out / "SerializerConfig.java").is_file()
    assert not (out / "TypeSerializerConfig.java").exists()


def test_merge_lists_files_without_out(capsys):
    assert main(args_for("merge")) == 0
    listed = capsys.readouterr().out.splitlines()
    assert "XmlClientConfigBuilder.java" in listed


def test_textual_conflict_exits_3(tmp_path):
    for leg, body in (("base", "int x = 0;"), ("left", "int x = 1;"),
                      ("right", "int x = 2;")):
        d = tmp_path / leg
        d.mkdir()
        (d / "A.java").write_text(
            f"package p;\n\npublic class A {{\n    {body}\n}}\n")
    assert main(args_for("detect", scenario=tmp_path)) == 3


def test_parse_error_exits_2(tmp_path):
    for leg in ("base", "left", "right"):
        d = tmp_path / leg
        d.mkdir()
        (d / "A.java").write_text("package p;\n\npublic class A {\n")
    assert main(args_for("detect", scenario=tmp_path)) == 2


def test_eval_command(tmp_path, capsys):
    report = tmp_path / "summary.json"
    assert main(["eval", str(CORPUS), "--report", str(report)]) == 0
    doc = json.loads(report.read_text())
    assert doc["coverage"] >= 0.9
    assert set(doc["perStrategy"]) == {"example", "rule"}


def test_eval_without_key_exits_1(tmp_path):
    assert main(["eval", str(tmp_path)]) == 1


def test_dump_flags_go_to_stderr(capsys):
    assert main(args_for("detect", dump_peg=True, dump_delta=True,
                         no_timing=True)) == 0
    captured = capsys.readouterr()
    assert "[peg:base]" in captured.err
    assert "[delta:left]" in captured.err
    json.loads(captured.out)        # stdout stays machine-readable


def test_missing_tree_dir_is_rejected(tmp_path, capsys):
    argv = args_for("detect")
    argv[argv.index("--left") + 1] = str(tmp_path / "nope")
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert "not a directory" in capsys.readouterr().err


def test_unknown_command_is_rejected():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
