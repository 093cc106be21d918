import itertools
import pytest
from pydantic import ValidationError
from permprod.models import ClassSpec, Variant, compose, product
from permprod.solvers import (
    SearchBudget,
    class_pair_realizable,
    class_triple_realizable,
    exhaustive_triple_search,
    full_double_search,
    min_degree,
    minimal_order_degree,
)
from permprod.exceptions import BudgetExceededError, DegreeMismatchError


def test_search_budget():
    """Tests budget validation and the configured default"""
    budget = SearchBudget.default()
    assert budget.max_degree == 10
    assert budget.max_nodes == 50_000_000

    with pytest.raises(ValidationError):
        SearchBudget(max_degree=0, max_nodes=1, time_cap=1.0)
    with pytest.raises(ValidationError):
        SearchBudget(max_degree=5, max_nodes=2**64, time_cap=1.0)


def test_minimal_order_degree():
    """Tests the least degree holding an element of a given order"""
    assert minimal_order_degree(1) == 1
    assert minimal_order_degree(6) == 5
    assert minimal_order_degree(8) == 8
    assert minimal_order_degree(12) == 7
    assert minimal_order_degree(30) == 10


def test_min_degree(budget):
    """Tests minimal degrees of small order triples"""
    assert min_degree(2, 2, 2, budget) == 4
    assert min_degree(2, 2, 3, budget) == 3
    assert min_degree(3, 3, 4, budget) == 6


def test_min_degree_budget(small_budget):
    """Tests that an insufficient budget is reported, not answered"""
    with pytest.raises(BudgetExceededError) as e:
        min_degree(3, 3, 4, small_budget)
    assert e.value.context["max_degree"] == 5

    tiny = SearchBudget(max_degree=8, max_nodes=10, time_cap=60.0)
    with pytest.raises(BudgetExceededError):
        exhaustive_triple_search(5, 3, 3, 4, tiny)


def test_exhaustive_triple_search(budget):
    """Tests witnesses and proven absences"""
    assert exhaustive_triple_search(5, 3, 3, 4, budget) is None

    x, y, z = exhaustive_triple_search(3, 2, 2, 3, budget)
    assert (x.order(), y.order(), z.order()) == (2, 2, 3)
    assert product([x, y, z]).is_identity()


def test_class_triple_realizable(budget, transpositions_s3):
    """Tests the three class search"""
    alpha, beta, gamma = class_triple_realizable(
        transpositions_s3, transpositions_s3, ClassSpec.of([3], 3), budget
    )
    assert compose(compose(alpha, beta), gamma).is_identity()
    assert gamma.order() == 3

    assert (
        class_triple_realizable(transpositions_s3, transpositions_s3, transpositions_s3, budget)
        is None
    )
    with pytest.raises(DegreeMismatchError):
        class_triple_realizable(
            transpositions_s3, transpositions_s3, ClassSpec.of([2], 4), budget
        )


def test_class_pair_realizable(budget, transpositions_s3):
    """Tests the two class search for each product shape"""
    alpha, beta = class_pair_realizable(
        transpositions_s3, transpositions_s3, Variant.FULL_CYCLE, budget
    )
    assert list(compose(alpha, beta).cycle_type().parts) == [3]

    c = ClassSpec.of([3], 4)
    alpha, beta = class_pair_realizable(c, c, Variant.SPLIT_CYCLE, budget)
    assert list(compose(alpha, beta).cycle_type().parts) == [2, 2]

    involutions = ClassSpec.of([2, 2], 4)
    assert class_pair_realizable(involutions, involutions, Variant.NEAR_CYCLE, budget) is None
    assert class_pair_realizable(
        ClassSpec.of([2], 2), ClassSpec.of([2], 2), Variant.NEAR_CYCLE, budget
    ) is None


def test_full_double_search_agrees(budget):
    """Tests the class representative reduction against the unreduced search"""
    for n in range(1, 5):
        for a, b, c in itertools.product(range(1, 5), repeat=3):
            reduced = exhaustive_triple_search(n, a, b, c, budget)
            full = full_double_search(n, a, b, c, budget)
            assert (reduced is None) == (full is None), (n, a, b, c)


@pytest.mark.slow
def test_min_degree_7_7_8(budget):
    """Tests a triple needing two more points than its largest order"""
    assert min_degree(7, 7, 8, budget) == 10
