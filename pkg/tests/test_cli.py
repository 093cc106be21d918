import json
from permprod.cli import EXIT_BUDGET, EXIT_DEFECT, EXIT_USAGE, exit_code, main
from permprod.exceptions import BudgetExceededError, OutOfRangeError, VerificationError


def _json(runner, *args, **kwargs):
    result = runner.invoke(main, [*args, "--json"], **kwargs)
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_exit_codes():
    """Tests the mapping of errors to exit codes"""
    assert exit_code(OutOfRangeError()) == EXIT_USAGE
    assert exit_code(VerificationError()) == EXIT_DEFECT
    assert exit_code(BudgetExceededError()) == EXIT_BUDGET


def test_solve(runner):
    """Tests the solve command"""
    envelope = _json(runner, "solve", "3", "5", "8")
    assert envelope["schema"] == "permprod/1"
    assert envelope["command"] == "solve"
    assert envelope["seed"] == 0
    assert envelope["result"]["degree"] == 10
    assert envelope["result"]["case"]["variant"] == "CEven_Case1_Exception358"
    assert envelope["verification"]["ok"]
    assert envelope["verification"]["orders"] == [3, 5, 8]
    assert envelope["verification"]["shape_ok"]
    assert "timing" not in envelope
    assert "arranged" not in envelope["result"]


def test_solve_arranges_slots(runner):
    """Tests unsorted orders"""
    envelope = _json(runner, "solve", "8", "3", "5")
    assert envelope["result"]["arranged"]["orders"] == [8, 3, 5]
    assert envelope["verification"]["orders"] == [8, 3, 5]
    assert envelope["verification"]["product_identity"]
    assert envelope["verification"]["shape_ok"]

    envelope = _json(runner, "solve", "4", "3", "2")
    assert envelope["result"]["case"]["variant"] == "EvenTriple_Sc_DropCycle"
    assert envelope["result"]["degree"] == 4
    assert envelope["verification"]["ok"]


def test_solve_is_deterministic(runner):
    """Tests that equal invocations print equal envelopes"""
    first = runner.invoke(main, ["solve", "4", "6", "9", "--json"])
    second = runner.invoke(main, ["solve", "4", "6", "9", "--json"])
    assert first.exit_code == 0
    assert first.output == second.output


def test_solve_rejects_bad_orders(runner):
    """Tests usage errors"""
    assert runner.invoke(main, ["solve", "1", "2", "3"]).exit_code == EXIT_USAGE
    assert runner.invoke(main, ["solve", "2", "3"]).exit_code == EXIT_USAGE


def test_seed_and_timing(runner):
    """Tests the seed environment variable and the timing option"""
    envelope = _json(runner, "solve", "2", "3", "7", "--timing", env={"PERMPROD_SEED": "7"})
    assert envelope["seed"] == 7
    assert envelope["timing"]["seconds"] >= 0

    envelope = _json(runner, "solve", "2", "3", "7", "--seed", "11")
    assert envelope["seed"] == 11
    assert runner.invoke(main, ["solve", "2", "3", "7", "--seed", "-1"]).exit_code == EXIT_USAGE


def test_extend(runner):
    """Tests the extend command"""
    envelope = _json(runner, "extend", "2", "2", "2", "2")
    assert envelope["result"]["degree"] == 4
    assert envelope["result"]["elements"] == ["(1,2)@4"] * 4
    assert envelope["verification"]["ok"]
    assert envelope["verification"]["shape_ok"]

    assert runner.invoke(main, ["extend", "2", "3"]).exit_code == EXIT_USAGE


def test_survey(runner):
    """Tests the survey command"""
    envelope = _json(runner, "survey", "--max-n", "6")
    assert envelope["result"]["total_cells"] == 36
    assert envelope["result"]["ok"]
    assert envelope["verification"] == {"ok": True, "failures": 0}

    assert runner.invoke(main, ["survey", "--max-n", "3"]).exit_code == EXIT_USAGE


def test_genus(runner):
    """Tests the genus command"""
    envelope = _json(runner, "genus", "(1,2)@2", "(1,2)@2")
    assert envelope["result"]["components"] == [{"orbit": [1, 2], "genus": 0}]
    assert envelope["result"]["index_sum"] == 2

    result = runner.invoke(main, ["genus", "(1,2)@3", "(2,3)"])
    assert result.exit_code == EXIT_USAGE
    result = runner.invoke(main, ["genus", "(1,2"])
    assert result.exit_code == EXIT_USAGE


def test_mindegree(runner):
    """Tests the mindegree command"""
    envelope = _json(runner, "mindegree", "3", "3", "4")
    assert envelope["result"]["min_degree"] == 6
    assert len(envelope["result"]["witness"]) == 3
    assert envelope["verification"]["ok"]

    result = runner.invoke(main, ["mindegree", "3", "3", "4", "--max-degree", "5"])
    assert result.exit_code == EXIT_BUDGET


def test_cover(runner):
    """Tests the cover command"""
    envelope = _json(runner, "cover", "2", "3", "7", "--labels", "0,1,inf")
    assert envelope["result"]["degree"] == 9
    assert set(envelope["result"]["per_point_ramification"]) == {"0", "1", "inf"}

    result = runner.invoke(main, ["cover", "3", "5", "8"])
    assert result.exit_code == 0
    assert "Branch Data Report" in result.output

    result = runner.invoke(main, ["cover", "2", "3", "7", "--labels", "a,b"])
    assert result.exit_code == EXIT_USAGE


def test_classify(runner):
    """Tests the classify command"""
    envelope = _json(runner, "classify", "10", "5", "3")
    assert envelope["result"]["orders"] == [3, 5, 10]
    assert envelope["result"]["variant"] == "CEven_Case2"
    assert envelope["result"]["recursion_trace"] == [[3, 5, 10], [3, 5, 8]]


def test_realize(runner):
    """Tests the realize command"""
    envelope = _json(runner, "realize", "-n", "5", "--c1", "3", "--c2", "3")
    assert envelope["result"]["product"] == "(1,2,3,4,5)@5"
    assert envelope["verification"]["class_match"]
    assert envelope["verification"]["product_shape"]

    envelope = _json(runner, "realize", "-n", "5", "--c1", "5", "--c2", "2", "--near")
    assert envelope["result"]["fixed_point"] == 5
    assert envelope["verification"]["ok"]

    assert runner.invoke(main, ["realize", "-n", "4", "--c1", "3", "--c2", "3"]).exit_code == 2
    assert runner.invoke(main, ["realize", "-n", "4", "--c1", "x", "--c2", "3"]).exit_code == 2


def test_text_output(runner):
    """Tests the default panel rendering"""
    result = runner.invoke(main, ["solve", "2", "3", "7"])
    assert result.exit_code == 0
    assert "solve" in result.output
    assert "seed 0" in result.output
