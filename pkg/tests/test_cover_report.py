import pytest
from pydantic import ValidationError
from permprod.reports import BranchSpec, CoverReport, branch_data_report


def test_branch_spec():
    """Tests branch spec validation and default labels"""
    spec = BranchSpec.of([2, 3, 7])
    assert spec.branch_points == ("p1", "p2", "p3")
    assert BranchSpec.of([2, 3, 7], ["0", "1", "inf"]).branch_points == ("0", "1", "inf")

    with pytest.raises(ValidationError):
        BranchSpec.of([2, 3])
    with pytest.raises(ValidationError):
        BranchSpec.of([1, 3, 7])
    with pytest.raises(ValidationError):
        BranchSpec.of([2, 3, 7], ["a", "b"])
    with pytest.raises(ValidationError):
        BranchSpec.of([2, 3, 7], ["a", "b", "a"])


def test_exceptional_cover():
    """Tests the branch data of the (3, 5, 8) cover"""
    report = branch_data_report(BranchSpec.of([3, 5, 8]))
    assert isinstance(report, CoverReport)
    assert report.degree == 10
    assert report.per_point_ramification == {
        "p1": (3, 3, 3, 1),
        "p2": (5, 1, 1, 1, 1, 1),
        "p3": (8, 2),
    }
    assert report.genus_per_orbit == [(frozenset(range(1, 11)), 0)]

    data = report.to_dict()
    assert data["degree"] == 10
    assert data["per_point_ramification"]["p3"] == [8, 2]
    assert data["genus_per_orbit"] == [{"orbit": list(range(1, 11)), "genus": 0}]


def test_disconnected_cover():
    """Tests a cover with several components"""
    report = CoverReport(BranchSpec.of([2, 2, 2, 2]))
    assert report.degree == 4
    assert report.per_point_ramification["p4"] == (2, 1, 1)
    assert [g for _, g in report.genus_per_orbit] == [1, 0, 0]


def test_cover_ramification_indices():
    """Tests that each branch point only carries 1, 2 and its order"""
    report = CoverReport(BranchSpec.of([2, 3, 7], ["0", "1", "inf"]))
    assert report.degree == 9
    for label, order in zip(("0", "1", "inf"), (2, 3, 7)):
        assert set(report.per_point_ramification[label]) <= {1, 2, order}
        assert sum(report.per_point_ramification[label]) == 9
    assert all(g >= 0 for _, g in report.genus_per_orbit)


def test_cover_report_text():
    """Tests the printed report"""
    text = str(CoverReport(BranchSpec.of([3, 5, 8])))
    assert "Branch Data Report" in text
    assert "Degree 10" in text
    assert "p1 (order 3): {3^3,1}" in text
    assert "p2 (order 5): {5,1^5}" in text
    assert "p3 (order 8): {8,2}" in text
    assert "10 points, genus 0" in text
