from __future__ import annotations

import pytest

from convex_blockers.errors import InputError, ResourceLimitError
from convex_blockers.verify import verify_special_blockers, verify_theorem


def test_verify_small_range_with_naive():
    reports = verify_theorem(2, 4, 4)
    assert [r.verdict for r in reports] == ["PASS", "PASS", "PASS"]
    assert [r.generated_count for r in reports] == [4, 12, 32]
    assert [r.oracle_count for r in reports] == [4, 12, 32]
    assert [r.spm_count for r in reports] == [2, 5, 14]
    for r in reports:
        assert r.set_equality and r.structural_pass and r.blocks_all_spms
        assert r.naive_agrees is True
        assert r.lower_bound_pass is True
        assert r.oracle_only == [] and r.generated_only == []


def test_verify_m6_without_naive():
    (report,) = verify_theorem(6, 6, 0)
    assert report.verdict == "PASS"
    assert report.spm_count == 132
    assert report.generated_count == 192
    assert report.naive_agrees is None
    assert report.lower_bound_pass is None


def test_verify_m2_lower_bound():
    (report,) = verify_theorem(2, 2, 2)
    assert report.verdict == "PASS"
    assert report.lower_bound_pass is True


def test_verify_full_default_range_passes():
    reports = verify_theorem(2, 6, 4)
    assert [r.verdict for r in reports] == ["PASS"] * 5
    assert [r.generated_count for r in reports] == [4, 12, 32, 80, 192]


def test_verify_argument_errors():
    with pytest.raises(InputError):
        verify_theorem(1, 3, 0)
    with pytest.raises(InputError):
        verify_theorem(4, 3, 0)
    with pytest.raises(ResourceLimitError):
        verify_theorem(2, 9, 0)


def test_report_json_is_deterministic_apart_from_timings():
    def stripped(report):
        payload = report.to_json()
        payload.pop("durations_ms")
        return payload

    first = [stripped(r) for r in verify_theorem(2, 3, 3)]
    second = [stripped(r) for r in verify_theorem(2, 3, 3)]
    assert first == second
    assert first[0]["verdict"] == "PASS"
    assert "witnesses" in first[0]


def test_report_json_has_phase_durations():
    (report,) = verify_theorem(3, 3, 3)
    durations = report.to_json()["durations_ms"]
    for phase in ("spm_enumeration", "blocker_generation", "oracle_class_pruned",
                  "structural_checks", "blocking_checks", "oracle_naive"):
        assert phase in durations
        assert durations[phase] >= 0


@pytest.mark.parametrize("m", [2, 3, 6])
def test_special_blockers(m):
    assert verify_special_blockers(m)


def test_special_blockers_rejects_m1():
    with pytest.raises(InputError):
        verify_special_blockers(1)
