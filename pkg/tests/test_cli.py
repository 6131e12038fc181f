import json

import pytest

from starringlab import cli


def run(argv, capsys):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_json_exit_zero(capsys):
    code, out, _ = run(
        ["verify", "--instance", "int3", "--suite", "axioms",
         "--probes", "12", "--format", "json"],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["header"]["instance"] == "int3"
    assert report["header"]["suite"] == "axioms"
    assert report["header"]["seed"] == 42
    assert all(row["matches"] for row in report["results"])


def test_verify_text_agrees_with_json(capsys):
    code_j, out_j, _ = run(
        ["verify", "--instance", "z5-control", "--suite", "axioms",
         "--probes", "8", "--format", "json"],
        capsys,
    )
    code_t, out_t, _ = run(
        ["verify", "--instance", "z5-control", "--suite", "axioms",
         "--probes", "8", "--format", "text"],
        capsys,
    )
    assert code_j == code_t == 0
    for row in json.loads(out_j)["results"]:
        assert row["lawId"] in out_t
        assert ("status=%s" % row["status"]) in out_t


def test_unknown_instance_exits_2(capsys):
    code, _, err = run(["verify", "--instance", "nosuch"], capsys)
    assert code == 2
    assert "unknown instance" in err


def test_unknown_suite_exits_2(capsys):
    code, _, err = run(
        ["verify", "--instance", "int3", "--suite", "nope"], capsys
    )
    assert code == 2
    assert "nope" in err


def test_malformed_instance_file_names_field(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"type": "matrix", "params": {}}')
    code, _, err = run(["verify", "--instance", str(bad)], capsys)
    assert code == 2
    assert "malformed instance file" in err and "n" in err


def test_instance_file_roundtrip(tmp_path, capsys):
    good = tmp_path / "good.json"
    good.write_text('{"type": "inttuple", "params": {"length": 2}}')
    code, out, _ = run(
        ["verify", "--instance", str(good), "--suite", "axioms",
         "--probes", "8"],
        capsys,
    )
    assert code == 0
    assert json.loads(out)["header"]["suite"] == "axioms"


def test_gallery_exit_zero(capsys):
    code, out, _ = run(
        ["gallery", "--instance", "int3", "--probes", "8"], capsys
    )
    assert code == 0
    rows = {r["lawId"]: r for r in json.loads(out)["results"]}
    assert rows["gal/int-squares"]["status"] == "Fail"
    assert rows["gal/int-squares"]["matches"]


def test_list_laws_json_and_text_agree(capsys):
    code_j, out_j, _ = run(["list-laws", "--format", "json"], capsys)
    code_t, out_t, _ = run(["list-laws", "--format", "text"], capsys)
    assert code_j == code_t == 0
    rows = json.loads(out_j)
    assert rows
    for row in rows:
        assert row["lawId"] in out_t


def test_audit_registry(capsys):
    code, out, _ = run(["audit-registry", "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["ok"]


def test_classify_relation(capsys):
    code, out, _ = run(
        ["classify-relation", "--instance", "int3", "--order", "plus",
         "--probes", "8"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    cls = payload["classification"]
    assert cls["reflexive"] and cls["transitive"] and cls["antisymmetric"]


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(
        ["verify", "--instance", "int3", "--suite", "axioms",
         "--probes", "8", "--output", str(target)],
        capsys,
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["header"]["instance"] == "int3"


def test_budget_env_rejects_garbage(monkeypatch, capsys):
    monkeypatch.setenv("STARRINGLAB_BUDGET_MS", "garbage")
    code, _, err = run(
        ["verify", "--instance", "int3", "--suite", "axioms"], capsys
    )
    assert code == 2
    assert "STARRINGLAB_BUDGET_MS" in err


def test_budget_env_caps_search(monkeypatch, capsys):
    monkeypatch.setenv("STARRINGLAB_BUDGET_MS", "1")
    code, out, _ = run(
        ["verify", "--instance", "m2", "--suite", "orthogonality",
         "--probes", "16"],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["header"]["budgetMs"] == 1
    assert any(row["status"] == "Unknown" for row in report["results"])


def test_no_subcommand_exits_2(capsys):
    assert cli.main([]) == 2
