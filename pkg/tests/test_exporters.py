import json
import pytest
from permprod.solvers import solve
from permprod.exporters import (
    JSONExporter,
    OutputEnvelope,
    TextExporter,
    TupleShape,
    export_envelope,
    independent_check,
)


@pytest.fixture
def envelope():
    return OutputEnvelope(
        command="solve",
        arguments={"orders": [2, 2, 2]},
        seed=0,
        result={"degree": 4, "x": "(1,2)@4"},
        verification=independent_check([[2, 1, 3, 4], [1, 2, 4, 3], [2, 1, 4, 3]], [2, 2, 2]),
    )


def test_independent_check():
    """Tests the raw image list verification"""
    summary = independent_check([[2, 1, 3, 4], [1, 2, 4, 3], [2, 1, 4, 3]], [2, 2, 2])
    assert summary["ok"]
    assert summary["product_identity"]
    assert summary["cycle_types"] == [[2, 1, 1], [2, 1, 1], [2, 2]]

    summary = independent_check([[2, 1, 3], [1, 3, 2]])
    assert not summary["product_identity"]
    assert not summary["ok"]

    assert not independent_check([[2, 1, 3, 4], [1, 2, 4, 3], [2, 1, 4, 3]], [2, 2, 4])["ok"]
    assert independent_check([[1, 1], [1, 2]]) == {"bijective": False, "ok": False}
    assert not independent_check([[1, 2], [1, 2, 3]])["bijective"]


def test_independent_check_shapes():
    """Tests the cycle type rules for triples and chains"""
    solved = solve(3, 5, 8)
    images = [p.images for p in solved.triple]
    summary = independent_check(images, [3, 5, 8], TupleShape.TRIPLE)
    assert summary["ok"]
    assert summary["shape_violations"] == []

    # orders and product are right, but z is of type (4, 4)
    x = [2, 1, 4, 3, 6, 5, 8, 7]
    y = [3, 2, 1, 4, 7, 6, 5, 8]
    z = [4, 1, 2, 3, 8, 5, 6, 7]
    assert independent_check([x, y, z], [2, 2, 4])["ok"]
    assert independent_check([x, y, z], [2, 2, 4], TupleShape.CHAIN)["ok"]
    summary = independent_check([x, y, z], [2, 2, 4], TupleShape.TRIPLE)
    assert summary["product_identity"] and summary["orders_match"]
    assert not summary["shape_ok"]
    assert not summary["ok"]
    assert summary["shape_violations"] == ["no element of order 4 is of type (4) or (4, 2)"]

    summary = independent_check([[2, 3, 1, 5, 4], [3, 1, 2, 5, 4]], [6, 6], TupleShape.CHAIN)
    assert summary["shape_violations"] == [
        "element 0 has cycles of lengths [3]",
        "element 1 has cycles of lengths [3]",
    ]
    assert not summary["ok"]


def test_envelope(envelope):
    """Tests the envelope fields"""
    assert envelope.schema_tag == "permprod/1"
    assert envelope.verified
    assert not envelope.model_copy(update={"verification": {"ok": False}}).verified


def test_json_exporter(envelope, tmp_path):
    """Tests the JSON rendering"""
    data = json.loads(JSONExporter(envelope).render())
    assert data["schema"] == "permprod/1"
    assert data["result"] == {"degree": 4, "x": "(1,2)@4"}
    assert "timing" not in data

    path = export_envelope(envelope, tmp_path / "solve.json")
    assert json.loads(path.read_text(encoding="utf-8")) == data


def test_text_exporter(envelope, tmp_path):
    """Tests the text rendering"""
    text = TextExporter(envelope).render()
    lines = text.splitlines()
    assert lines[0] == "solve (seed 0)"
    assert "    degree: 4" in lines
    assert lines[lines.index("arguments:") + 1] == "    orders: 2, 2, 2"

    path = export_envelope(envelope, tmp_path / "solve.txt", "text")
    assert path.read_text(encoding="utf-8") == text + "\n"

    with pytest.raises(ValueError):
        export_envelope(envelope, tmp_path / "solve.csv", "csv")
