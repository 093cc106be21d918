import pytest
from permprod.config import config
from permprod.reports import SurveyReport, check_triple
from permprod.reports.survey_report import _solve_sorted
from permprod.solvers import survey
from permprod.exceptions import OutOfRangeError


def test_check_triple():
    """Tests a single unsorted cell"""
    outcome = check_triple((8, 3, 5))
    assert outcome["orders"] == (8, 3, 5)
    assert outcome["degree"] == 10
    assert outcome["seconds"] >= 0


def test_check_triple_caches_per_seed():
    """Tests that a new solver seed is not served from the cache of another"""
    _solve_sorted.cache_clear()
    try:
        config.configure_solver(0)
        check_triple((3, 4, 6))
        check_triple((6, 4, 3))
        config.configure_solver(5)
        check_triple((3, 4, 6))
    finally:
        config.configure_solver(0)
    assert _solve_sorted.cache_info().misses == 2
    assert _solve_sorted.cache_info().hits == 1


def test_smallest_survey():
    """Tests the survey of S_4"""
    report = SurveyReport(4, jobs=1)
    assert report.counts == {4: {"cells": 1, "passed": 1}}
    assert report.ok


def test_survey():
    """Tests every cell up to S_6"""
    report = survey(6, jobs=1)
    assert report.total_cells == 36
    assert report.counts[5] == {"cells": 8, "passed": 8}
    assert report.ok
    assert report.failures == []

    data = report.to_dict()
    assert data["counts"]["6"] == {"cells": 27, "passed": 27}
    assert "max_solve_time" not in data
    assert report.to_dict(timing=True)["max_solve_time"] >= 0

    text = str(report)
    assert "Order Triple Survey" in text
    assert "27/27" in text
    assert "Cells 36, failures 0" in text


def test_survey_rejects_small_degree():
    """Tests that the survey starts at S_4"""
    with pytest.raises(OutOfRangeError) as e:
        SurveyReport(3)
    assert e.value.context == {"n_max": 3}


def test_survey_counts_ignore_jobs():
    """Tests that the job count does not change the outcome"""
    assert SurveyReport(7, jobs=2).counts == SurveyReport(7, jobs=1).counts


@pytest.mark.slow
def test_survey_to_fifty():
    """Tests every cell up to S_50"""
    report = SurveyReport(50, jobs=1)
    assert report.total_cells == sum((n - 3) ** 3 for n in range(4, 51))
    assert report.ok
