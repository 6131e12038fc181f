import pytest

from starringlab import oracle_audit


def test_psd_sos_exhaustive():
    summary = oracle_audit.audit_psd_sos()
    assert summary["checked"] == 2401
    assert 0 < summary["psd"] < summary["checked"]


def test_int_positivity_exhaustive():
    summary = oracle_audit.audit_int_positivity()
    # 19 + 19^2 + 19^3 tuples with entries in [-9, 9]
    assert summary["checked"] == 19 + 361 + 6859
    assert summary["positive"] == 10 + 100 + 1000


def test_range_projection_sampled():
    summary = oracle_audit.audit_range_projection(samples=50, seed=2024)
    assert summary["checked"] == 50


def test_range_projection_deterministic():
    a = oracle_audit.audit_range_projection(samples=20, seed=5)
    b = oracle_audit.audit_range_projection(samples=20, seed=5)
    assert a == b


def test_run_all_includes_every_audit():
    summary = oracle_audit.run_all()
    assert set(summary) == {"psdSos", "intPositivity", "rangeProjection"}


def test_audit_error_is_assertion():
    assert issubclass(oracle_audit.OracleAuditError, AssertionError)
