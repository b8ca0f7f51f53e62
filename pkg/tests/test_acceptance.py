import pytest

from qhk.acceptance import CRITERIA, run_all, run_criterion

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    r = run_criterion(number)
    print(r.line())
    ACCEPTANCE_LINES[number] = r.line()
    assert r.passed, r.detail


def test_criteria_are_numbered_one_to_ten():
    assert sorted(CRITERIA) == list(range(1, 11))


def test_run_all_subset_reports_each():
    results = run_all([1, 3])
    assert [r.number for r in results] == [1, 3]
    assert all(r.line().startswith("[PASS]") for r in results)
