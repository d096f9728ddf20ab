import json
import math

import pytest

from optbench.api.config import AuditConfig
from optbench.exceptions import OptbenchException
from optbench.registry import Differentiability, get_catalog, lookup
from optbench.verify import (
    REPORT_COLUMNS,
    AuditReport,
    AuditStatus,
    audit_all,
    check_minimum,
    errata_ledger,
    expected_errata_json,
    ledger_json,
    load_expected_errata,
    report_csv,
    report_json,
)


def statuses(key):
    return {r.status for r in check_minimum(key)}


def test_beale_verified():
    (record,) = check_minimum("beale")
    assert record.status == AuditStatus.verified
    assert record.residual == 0.0
    assert record.point == (3.0, 0.5)
    assert record.refined_value <= record.evaluated
    assert record.stationarity is not None and record.stationarity < 1e-3


def test_sign_and_maximum_errors_are_discrepant():
    (egg,) = check_minimum("egg-holder")
    assert egg.status == AuditStatus.discrepant
    assert egg.residual == pytest.approx(2 * 959.64, abs=0.1)
    # alpine 2's printed point is a maximum
    assert statuses("alpine-2") == {AuditStatus.discrepant}
    assert statuses("stepint") == {AuditStatus.discrepant}


def test_cross_in_tray_four_minima():
    records = check_minimum("cross-in-tray")
    assert len(records) == 4
    assert all(r.residual <= 1e-6 for r in records)
    assert AuditStatus.discrepant not in {r.status for r in records}


@pytest.mark.parametrize("key,bound", [("branin-rcos", 5e-4), ("six-hump-camel", 5e-4), ("giunta", 5e-4), ("styblinski-tang", 5e-4), ("zirilli", 5e-2)])
def test_rounded_claims_hold(key, bound):
    records = check_minimum(key)
    assert all(r.residual is not None and r.residual <= bound for r in records)


def test_corrected_entries():
    step_2 = check_minimum("step-2")
    assert [r.status for r in step_2] == [AuditStatus.corrected]
    assert step_2[0].residual == 0.0
    trecanni = check_minimum("trecanni")
    assert [r.point for r in trecanni] == [(0.0, 0.0), (-2.0, 0.0)]
    assert all(r.residual == 0.0 and r.status == AuditStatus.corrected for r in trecanni)
    branin = check_minimum("branin-rcos")
    assert branin[-1].status == AuditStatus.corrected


def test_undefined_claimed_point():
    (record,) = check_minimum("rump")
    assert record.status == AuditStatus.unverifiable
    assert record.evaluated is None
    assert "evaluation failed" in record.note


def test_entry_without_concrete_optimum():
    (record,) = check_minimum("powell-sum")
    assert record.point is None
    assert record.status == AuditStatus.unverifiable


def test_tolerance_override():
    with pytest.raises(ValueError):
        check_minimum("beale", tol=0)
    (record,) = check_minimum("zirilli", tol=1e-12)
    assert record.status == AuditStatus.discrepant
    assert record.tolerance == 1e-12


def test_refinement_budget_is_configurable():
    (record,) = check_minimum("egg-holder", config=AuditConfig(refine_iterations=1))
    assert record.status == AuditStatus.discrepant


def test_report_formats():
    records = check_minimum("trecanni") + check_minimum("rump")
    parsed = json.loads(report_json(records))
    assert [r["fn"] for r in parsed] == [149, 149, 109]
    assert parsed[2]["evaluated"] is None
    lines = report_csv(records).split("\n")
    assert lines[0] == ",".join(REPORT_COLUMNS)
    assert lines[1].startswith('149,trecanni,"0,0",0,0,0,"0,0",')
    assert report_json(records) == report_json(check_minimum("trecanni") + check_minimum("rump"))


def test_report_aggregation():
    report = AuditReport(check_minimum("beale") + check_minimum("stepint") + check_minimum("rump"))
    assert report.function_status() == {10: AuditStatus.verified, 141: AuditStatus.discrepant, 109: AuditStatus.unverifiable}
    assert report.discrepant() == {141}
    summary = report.summary()
    assert summary["functions"] == 3
    assert summary["functions_by_status"]["Discrepant"] == 1


def test_ledger_notes():
    specs = [lookup(i) for i in (14, 15, 105, 125, 126, 139, 141)]
    report = audit_all(specs=specs)
    ledger = errata_ledger(report)
    assert [e["fn"] for e in ledger] == sorted(e["fn"] for e in ledger)
    findings = {(e["fn"], e["kind"]): e for e in ledger if e["kind"] != "flag"}
    assert "duplicate of f125" in findings[(126, "interpretation")]["finding"]
    assert "Biggs EXP5" in findings[(15, "interpretation")]["finding"]
    assert any(e["fn"] == 105 and e["kind"] == "flag" and e["finding"].startswith("printed partial derivative") for e in ledger)
    assert findings[(141, "audit")]["status"] == "Discrepant"
    assert findings[(141, "audit")]["policy"] == "as-printed"
    assert findings[(139, "audit")]["policy"] == "canonical"
    assert json.loads(ledger_json(report)) == json.loads(json.dumps(ledger))


def test_expected_errata_round_trip(tmp_path):
    report = audit_all(specs=[lookup(i) for i in (10, 53, 141)])
    target = tmp_path / "errata.json"
    target.write_text(expected_errata_json(report))
    assert set(load_expected_errata(target)) == {53, 141}


def test_expected_errata_errors(tmp_path):
    with pytest.raises(OptbenchException):
        load_expected_errata(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(OptbenchException):
        load_expected_errata(bad)


def test_packaged_expected_errata():
    expected = load_expected_errata()
    assert {7, 53, 54, 96, 116, 141} <= set(expected)
    assert all(1 <= k <= 175 for k in expected)


@pytest.mark.integration
def test_audit_all_catalog():
    report = audit_all(workers=4)
    indices = [r.function.index for r in report.records]
    assert indices == sorted(indices)
    assert {7, 53, 54, 96, 116, 141} <= report.discrepant()
    assert report_json(report.records) == report_json(audit_all().records)


@pytest.mark.integration
def test_verified_interior_minima_are_stationary():
    report = audit_all()
    flagged = {e["fn"] for e in errata_ledger(report)}
    checked = 0
    for r in report.records:
        spec = lookup(r.function.index)
        if r.status != AuditStatus.verified or r.function.index in flagged:
            continue
        if spec.flags.differentiability != Differentiability.differentiable or spec.stochastic:
            continue
        lo, hi = spec.bounds.arrays(len(r.point))
        if any(not (l < v < h) for v, l, h in zip(r.point, lo, hi)):
            continue
        assert r.stationarity is not None and r.stationarity <= AuditConfig().stationarity_threshold * max(1.0, abs(r.claimed)), r
        checked += 1
    assert checked > 10
    assert len(get_catalog()) == 175
    assert not any(math.isnan(r.residual) for r in report.records if r.residual is not None)


@pytest.mark.parametrize(
    "key,dimension",
    [("booth", None), ("three-hump-camel", None), ("goldstein-price", None), ("himmelblau", None), ("leon", None), ("rosenbrock", 2), ("rosenbrock", 5), ("sphere", 2), ("sphere", 10)],
)
def test_golden_points_have_zero_residual(key, dimension):
    records = check_minimum(key, dimension=dimension)
    assert records and all(r.residual == 0.0 for r in records)
    if dimension is not None:
        assert all(len(r.point) == dimension for r in records)


def test_audit_dimension_must_be_accepted():
    with pytest.raises(OptbenchException):
        check_minimum("beale", dimension=3)
