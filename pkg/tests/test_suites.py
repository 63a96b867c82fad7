"""Verification suites: report shape, determinism, and small-bound runs of
every registered suite."""

import json

import pytest

from omegapower import SUITES, WorkbenchError, run_suite
from omegapower.suites import SuiteReport, _Collector


def test_registry():
    assert sorted(SUITES) == [
        "E-dual-characterization",
        "a-omega-decomposition",
        "erase-homomorphism",
        "knj-roundtrip",
        "mu-knj-disjoint",
        "pair-enum-roundtrip",
        "sigma2-main",
        "theorem2-key-equality",
        "xi-low-witnesses",
    ]
    with pytest.raises(WorkbenchError):
        run_suite("no-such-suite")


def test_every_suite_passes_at_small_bounds():
    small = {
        "pair-enum-roundtrip": dict(bound=500),
        "erase-homomorphism": dict(bound=4),
        "E-dual-characterization": dict(bound=6),
        "xi-low-witnesses": dict(bound=3),
        "knj-roundtrip": dict(bound=60),
        "theorem2-key-equality": dict(bound=2),
        "mu-knj-disjoint": dict(bound=1),
    }
    for name, params in small.items():
        report = run_suite(name, **params)
        assert report.verdict == "pass", report.summary()
        assert report.cases_total > 0
        assert report.cases_failed == 0
        assert report.counterexamples == []


def test_report_fields_and_verdict():
    report = run_suite("pair-enum-roundtrip", bound=100)
    assert report.suite == "pair-enum-roundtrip"
    assert report.parameters["bound"] == 100
    assert report.cases_failed + report.cases_inconclusive <= report.cases_total
    assert report.runtime_ms >= 0
    assert report.version
    line = report.summary()
    assert "pair-enum-roundtrip" in line and "pass" in line


def test_fail_verdict_requires_counterexamples():
    col = _Collector()
    col.case("w1", True, True)
    col.case("w2", True, False)
    report = SuiteReport("demo", {}, col, 1)
    assert report.verdict == "fail"
    assert report.counterexamples == [["w2", "True", "False"]]
    assert report.cases_total == 2 and report.cases_failed == 1


def test_inconclusive_verdict():
    col = _Collector()
    col.bulk_pass(3)
    col.undecided("w9")
    report = SuiteReport("demo", {}, col, 1)
    assert report.verdict == "inconclusive"
    assert report.cases_total == 4 and report.cases_inconclusive == 1


def test_json_report_is_deterministic():
    a = run_suite("knj-roundtrip", bound=80).to_json()
    b = run_suite("knj-roundtrip", bound=80).to_json()
    assert a == b
    doc = json.loads(a)
    assert doc["suite"] == "knj-roundtrip"
    assert doc["verdict"] == "pass"
    assert doc["cases_failed"] == 0
    assert set(doc) == {
        "suite",
        "parameters",
        "cases_total",
        "cases_failed",
        "cases_inconclusive",
        "counterexamples",
        "verdict",
        "version",
    }


def test_seeded_suites_record_their_seed():
    report = run_suite("a-omega-decomposition", bound=2, seed=99)
    assert report.parameters["seed"] == 99
    assert report.verdict == "pass", report.summary()
    again = run_suite("a-omega-decomposition", bound=2, seed=99)
    assert report.to_json() == again.to_json()


def test_sigma2_suite_small_budget_reports_inconclusive_rate():
    # with a starved budget the suite must degrade to inconclusive, never
    # to a false verdict
    report = run_suite("sigma2-main", bound=2, seed=5, budget=1)
    assert report.cases_failed == 0
    assert report.cases_inconclusive > 0
    assert report.verdict == "inconclusive"
