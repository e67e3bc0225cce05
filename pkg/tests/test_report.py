"""Report construction, JSON round-trip, determinism, and skip markers."""

from __future__ import annotations

import json

import pytest

from blowup_census import (
    SKIPPED_CAP,
    SKIPPED_NOT_REQUESTED,
    Family,
    Graph,
    Rational,
    RunConfig,
    VerificationReport,
    build_report,
    render_summary,
)


def _config(**overrides) -> RunConfig:
    base = dict(family=Family.C4, max_level=1)
    base.update(overrides)
    return RunConfig(**base)


def test_c4_report_flags_and_findings():
    report = build_report(_config())
    assert report.family == "c4"
    assert len(report.levels) == 2
    for rec in report.levels:
        flags = rec.match_flags
        assert flags["enum_vs_diagonal"] is True
        assert flags["non_edges_formula_vs_graph"] is True
        assert flags["edges_formula_vs_graph"] is True
        assert flags["enum_vs_recurrence"] is True
        assert flags["diagonal_vs_recurrence"] is True
        assert flags["closed_derived_vs_recurrence"] is True
        assert flags["closed_stated_vs_recurrence"] is False
    # the stated mismatch is a finding, not a failure
    assert report.passed
    assert [f.level for f in report.findings] == [0, 1]
    assert all(f.comparison == "closed_stated_vs_recurrence" for f in report.findings)
    assert "non-integer" in report.findings[0].note


def test_level_record_values():
    report = build_report(_config())
    rec = report.levels[1]
    assert rec.vertices == 16
    assert rec.edges == 80
    assert rec.non_edges_graph == rec.non_edges_formula == 40
    assert rec.T_enum == rec.T_diagonal == rec.T_recurrence == 404
    assert rec.T_closed_derived == 404
    assert isinstance(rec.T_closed_stated, Rational)
    assert rec.breakdown.total == 404
    assert set(rec.timings) == {"formulas", "build", "enum", "diagonal"}


def test_theta_report_passes():
    report = build_report(RunConfig(family=Family.THETA222, max_level=1))
    assert report.passed
    assert report.levels[1].T_recurrence == 2886


def test_json_roundtrip_equality():
    report = build_report(_config())
    text = report.to_json()
    restored = VerificationReport.from_json(text)
    assert restored == report
    # and the rendered JSON is actually valid JSON with the documented top level
    assert sorted(json.loads(text)) == ["config", "family", "findings", "levels", "meta"]


def test_meta_contents():
    report = build_report(_config(max_level=0))
    assert report.meta["tool"] == "blowup-census"
    assert "version" in report.meta and "python" in report.meta
    # RFC 3339: date, 'T', time, explicit offset
    assert "T" in report.meta["timestamp"]
    assert report.meta["timestamp"].endswith("+00:00")


def test_determinism_modulo_timings():
    a = build_report(_config())
    b = build_report(_config())
    assert a.comparable_dict() == b.comparable_dict()


def test_worker_count_does_not_change_substance():
    a = build_report(_config(workers=1)).comparable_dict()
    b = build_report(_config(workers=2)).comparable_dict()
    a["config"].pop("workers")
    b["config"].pop("workers")
    assert a == b


def test_subset_cap_marks_skipped():
    report = build_report(_config(subset_cap=100))
    rec = report.levels[1]  # C(16, 4) = 1820 > 100
    assert rec.T_enum == SKIPPED_CAP
    assert rec.match_flags["enum_vs_diagonal"] == SKIPPED_CAP
    assert rec.match_flags["enum_vs_recurrence"] == SKIPPED_CAP
    # the diagonal side still ran and still verifies
    assert rec.T_diagonal == 404
    assert rec.match_flags["diagonal_vs_recurrence"] is True
    assert report.passed


def test_vertex_cap_marks_whole_level_skipped():
    report = build_report(_config(vertex_cap=10))
    rec = report.levels[1]
    assert rec.non_edges_graph == SKIPPED_CAP
    assert rec.T_enum == SKIPPED_CAP
    assert rec.T_diagonal == SKIPPED_CAP
    # formulas still evaluate; edges falls back to the closed form
    assert rec.non_edges_formula == 40
    assert rec.edges == 80
    assert rec.match_flags["edges_formula_vs_graph"] == SKIPPED_CAP
    assert report.passed


def test_methods_not_requested_marker():
    report = build_report(_config(methods=("diagonal",)))
    rec = report.levels[0]
    assert rec.T_enum == SKIPPED_NOT_REQUESTED
    assert rec.T_diagonal == 1
    assert rec.match_flags["enum_vs_recurrence"] == SKIPPED_NOT_REQUESTED


def test_custom_family_report():
    base = Graph.from_edges(3, [(0, 1), (1, 2)])
    config = RunConfig(family=Family.CUSTOM, max_level=1, input_path="p3.edges")
    report = build_report(config, custom_base=base)
    assert report.passed
    rec = report.levels[1]
    assert rec.vertices == 9
    assert rec.non_edges_formula is None
    assert rec.T_recurrence is None
    assert rec.breakdown is None
    assert set(rec.match_flags) == {"enum_vs_diagonal"}
    assert rec.match_flags["enum_vs_diagonal"] is True
    # round-trip with None fields intact
    assert VerificationReport.from_json(report.to_json()) == report


def test_custom_family_requires_base():
    with pytest.raises(ValueError):
        build_report(RunConfig(family=Family.CUSTOM, max_level=0))


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(family=Family.C4, max_level=-1)
    with pytest.raises(ValueError):
        RunConfig(family=Family.C4, max_level=0, vertex_cap=0)


def test_render_summary_mentions_findings_and_result():
    report = build_report(_config(max_level=0))
    text = render_summary(report)
    assert "result: PASS" in text
    assert "closed_stated_vs_recurrence" in text
    assert "10752/5670" in text
