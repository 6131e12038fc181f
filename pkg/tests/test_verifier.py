import json

import pytest

from starringlab import verifier
from starringlab.starring import get_instance


def test_registry_audit_is_clean():
    audit = verifier.audit_registry()
    assert audit["ok"]
    assert audit["missing"] == []
    assert set(audit["outOfScope"]) == {
        "SPBlack",
        "continuous-function-counterexamples",
        "numerical-range",
        "wBSP",
    }


def test_law_ids_unique_and_suites_known():
    rows = verifier.list_laws()
    ids = [row["lawId"] for row in rows]
    assert len(ids) == len(set(ids))
    suites = {row["suite"] for row in rows}
    assert suites == set(verifier.SUITE_ORDER) | {"gallery"}
    for row in rows:
        assert row["scope"]


def test_normalize_suite():
    assert verifier.normalize_suite("all") == "all"
    assert verifier.normalize_suite("latticestructure") == "lattice"
    assert verifier.normalize_suite("Axioms") == "axioms"
    with pytest.raises(ValueError):
        verifier.normalize_suite("nope")


def test_axiom_suite_passes_on_m2():
    report = verifier.run_suite(get_instance("m2"), suite="axioms",
                                seed=42, probe_count=16)
    assert report.ok
    assert report.header["instance"] == "m2"
    assert report.header["seed"] == 42
    statuses = {row["lawId"]: row["status"] for row in report.results}
    assert statuses["ax/properness"] == "Pass"
    assert statuses["ax/salience"] == "Pass"


def test_control_instance_fails_where_expected():
    report = verifier.run_suite(get_instance("z5-control"), suite="axioms",
                                seed=42, probe_count=8)
    assert report.ok  # failures are expected, so the report still matches
    rows = {row["lawId"]: row for row in report.results}
    salience = rows["ax/salience"]
    assert salience["status"] == "Fail"
    assert salience["expected"] == "FailsWithWitness"
    assert salience["matches"]
    assert salience["witness"] is not None


def test_gated_suites_are_skipped_on_controls():
    report = verifier.run_suite(get_instance("z5-control"), suite="fixators",
                                seed=42, probe_count=8)
    executed = {row["lawId"] for row in report.results}
    assert not executed
    assert report.header["skipped"]


def test_reports_are_byte_identical():
    a = verifier.run_suite(get_instance("int3"), suite="all",
                           seed=42, probe_count=16).dumps()
    b = verifier.run_suite(get_instance("int3"), suite="all",
                           seed=42, probe_count=16).dumps()
    assert a == b
    assert "elapsed" not in a and "time" not in json.loads(a)["header"]


def test_budget_exhaustion_reports_unknown_without_mismatch():
    report = verifier.run_suite(get_instance("m2"), suite="orthogonality",
                                seed=42, probe_count=16, budget_ms=0)
    unknowns = [row for row in report.results if row["status"] == "Unknown"]
    assert unknowns
    for row in unknowns:
        assert row["note"] == verifier.BUDGET_NOTE
        assert row["matches"]
    assert report.ok


def test_text_and_json_statuses_agree():
    report = verifier.run_suite(get_instance("int3"), suite="axioms",
                                seed=42, probe_count=12)
    text = report.render_text()
    for row in report.results:
        assert row["lawId"] in text
        assert ("status=%s" % row["status"]) in text


def test_gallery_counterexamples_match_on_m2():
    report = verifier.run_gallery(get_instance("m2"), probe_count=16)
    rows = {row["lawId"]: row for row in report.results}
    assert rows["gal/m2-sa-pair"]["status"] == "Fail"
    assert rows["gal/m2-sa-pair"]["matches"]
    assert rows["gal/c-cube-product"]["status"] == "Fail"
    assert report.ok


def test_witnesses_are_json_serializable():
    report = verifier.run_suite(get_instance("z6-control"), suite="all",
                                seed=42, probe_count=8)
    json.loads(report.dumps())
    assert report.ok
