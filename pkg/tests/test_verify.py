"""Unit tests for the check runner itself.

The real checks run in test_acceptance.py; here we only exercise the
enforcement mechanics: budget overruns, the concurrency allowance, and
verbatim failure reporting.  Budgets are shrunk by monkeypatching so no
test has to wait out a real overrun.
"""

import pytest

import surfmaps.verify as verify
from surfmaps import PreconditionError, check_names


def _with_budget(name, budget):
    return [(nm, fn, budget if nm == name else b)
            for nm, fn, b in verify._CHECKS]


class TestRunner:
    def test_budget_overrun_fails(self, monkeypatch):
        monkeypatch.setattr(
            verify, "_CHECKS", _with_budget("planar-counts", 1e-9))
        res = verify._run_one("planar-counts")
        assert not res.passed
        assert "exceeded the 0s budget" in res.detail
        # the mathematical detail is kept in front of the verdict
        assert res.detail.startswith("census")

    def test_slack_widens_allowance(self, monkeypatch):
        monkeypatch.setattr(
            verify, "_CHECKS", _with_budget("planar-counts", 1e-9))
        res = verify._run_one("planar-counts", slack=1e12)
        assert res.passed

    def test_oversubscribed_overrun_names_allowance(self, monkeypatch):
        monkeypatch.setattr(
            verify, "_CHECKS", _with_budget("planar-counts", 1e-9))
        res = verify._run_one("planar-counts", slack=2.0)
        assert not res.passed
        assert "allowance" in res.detail

    def test_exception_reported_verbatim(self, monkeypatch):
        def boom():
            raise ValueError("boom")

        rows = [(nm, boom if nm == "planar-counts" else fn, b)
                for nm, fn, b in verify._CHECKS]
        monkeypatch.setattr(verify, "_CHECKS", rows)
        res = verify._run_one("planar-counts")
        assert not res.passed
        assert res.detail == "ValueError: boom"

    def test_result_records_stated_budget(self, monkeypatch):
        monkeypatch.setattr(
            verify, "_CHECKS", _with_budget("planar-counts", 1e-9))
        res = verify._run_one("planar-counts", slack=5.0)
        # the stated budget is reported, not the widened allowance
        assert res.budget == 1e-9


class TestLevels:
    def test_unknown_level_rejected(self):
        with pytest.raises(PreconditionError):
            check_names("exhaustive")

    def test_smoke_is_a_desk_subset(self):
        assert set(check_names("smoke")) < set(check_names("desk"))

    def test_jobs_must_be_positive(self):
        with pytest.raises(PreconditionError):
            verify.run_verification("smoke", jobs=0)

    def test_cpu_slots_positive(self):
        assert verify._cpu_slots() >= 1
