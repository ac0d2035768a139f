from rectchar.verify import (
    CRITERIA,
    REFERENCE_FLIPPED_TWO_RECT,
    VerifyReport,
    catalan_number,
    consistency_spot_checks,
    default_thread_count,
    run_criteria,
)

from oracles import CATALAN


def test_criteria_roster():
    assert len(CRITERIA) == 12
    names = [name for name, _ in CRITERIA]
    assert names[0] == "theorem1-grid"
    assert names[3] == "two-rect-reference-data"
    assert names[11] == "shape-sum-vs-pair-sum"
    assert len(set(names)) == 12


def test_reference_tables_are_plausible():
    assert set(REFERENCE_FLIPPED_TWO_RECT) == {1, 2, 3, 4}
    for k, table in REFERENCE_FLIPPED_TWO_RECT.items():
        assert all(coef > 0 for coef in table.values())
        assert all(len(exps) == 4 for exps in table)
        # every non-constant term mixes a row variable with a column variable
        assert all(
            (e[0] + e[1] > 0) and (e[2] + e[3] > 0) for e in table if any(e)
        )


def test_catalan_number_helper():
    assert [catalan_number(i) for i in range(len(CATALAN))] == CATALAN


def test_run_criteria_subset_orders_and_reports():
    reports = run_criteria(numbers=[4, 2], threads=1)
    assert [r.number for r in reports] == [2, 4]
    for r in reports:
        assert isinstance(r, VerifyReport)
        assert r.passed is True
        assert r.elapsed >= 0.0
        assert r.detail
        d = r.to_dict()
        assert d["number"] == r.number and d["passed"] is True


def test_run_criteria_threaded_matches_serial():
    serial = run_criteria(numbers=[2, 3, 4], threads=1)
    threaded = run_criteria(numbers=[2, 3, 4], threads=3)
    assert [(r.number, r.passed) for r in serial] == [
        (r.number, r.passed) for r in threaded
    ]


def test_exception_becomes_failure(monkeypatch):
    import rectchar.verify as verify_mod

    def explodes(full=False):
        raise RuntimeError("boom")

    monkeypatch.setattr(verify_mod, "CRITERIA", [("explodes", explodes)])
    reports = run_criteria(threads=1)
    assert len(reports) == 1
    assert reports[0].passed is False
    assert "RuntimeError" in reports[0].detail


def test_default_thread_count_env(monkeypatch):
    monkeypatch.setenv("RECTCHAR_THREADS", "3")
    assert default_thread_count() == 3
    monkeypatch.setenv("RECTCHAR_THREADS", "0")
    assert default_thread_count() == 1
    monkeypatch.delenv("RECTCHAR_THREADS")
    assert default_thread_count() >= 1


def test_consistency_spot_checks_clean():
    assert consistency_spot_checks() == []
