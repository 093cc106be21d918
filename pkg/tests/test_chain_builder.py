import random
import pytest
from permprod.models import CycleType, Permutation, SplitNode, order_cycle_types, product
from permprod.reports import index_sum
from permprod.solvers import (
    align_to_inverse,
    bertrand_prime,
    degree_six_table,
    extend,
    replay,
)
from permprod.exceptions import (
    InvalidArityError,
    NoSuchPrimeError,
    OutOfRangeError,
    TypeMismatchError,
)


def _assert_chain(result, orders):
    assert product(result.elements).is_identity()
    assert [e.order() for e in result.elements] == list(orders)
    assert result.degree == max(orders) + 2
    assert index_sum(result.elements) % 2 == 0


def test_bertrand_prime():
    """Tests the prime strictly above n/2 and at most n - 2"""
    assert bertrand_prime(5) == 3
    assert bertrand_prime(7) == 5
    assert bertrand_prime(10) == 7
    assert bertrand_prime(30) == 17

    for n in (4, 6):
        with pytest.raises(NoSuchPrimeError) as e:
            bertrand_prime(n)
        assert e.value.context == {"n": n}


def test_prime_order_elements_are_cycles():
    """Tests that an element of the split prime's order is a single cycle"""
    for n in [5] + list(range(7, 31)):
        p = bertrand_prime(n)
        assert order_cycle_types(n, p) == [CycleType.padded([p], n)]


def test_align_to_inverse():
    """Tests conjugating a tuple onto a prescribed product"""
    elements = [Permutation.parse("(1,2)@3"), Permutation.parse("(2,3)")]
    target = Permutation.parse("(1,3,2)")
    aligned = align_to_inverse(elements, target)
    assert product(aligned) == target.inverse()
    assert all(e.cycle_type() == CycleType([2, 1]) for e in aligned)

    with pytest.raises(TypeMismatchError):
        align_to_inverse(elements, Permutation.parse("(1,2)@3"))


def test_extend_involutions():
    """Tests chains of transpositions in S_4"""
    result = extend([2, 2, 2, 2])
    assert result.elements == (Permutation.parse("(1,2)@4"),) * 4
    assert result.split_tree is None

    result = extend([2, 2, 2])
    _assert_chain(result, [2, 2, 2])
    assert result.elements[2] == Permutation.parse("(1,2)(3,4)")


def test_extend_triple():
    """Tests that three orders keep their slots"""
    result = extend([8, 3, 5])
    _assert_chain(result, [8, 3, 5])
    assert result.split_tree is None


def test_extend_splits():
    """Tests chains built from prime splits"""
    result = extend([3, 3, 3, 4])
    _assert_chain(result, [3, 3, 3, 4])
    assert result.split_tree == SplitNode(
        prime=5, left_indices=(0, 1), right_indices=(2, 3)
    )

    result = extend([5, 5, 5, 5, 5])
    _assert_chain(result, [5, 5, 5, 5, 5])
    assert result.split_tree.prime == 5
    assert result.split_tree.right_indices == (2, 3, 4)
    assert result.split_tree.right.left_indices == (0, 1)
    assert result.to_dict()["split_tree"]["left"] is None


def test_extend_rejects_bad_orders():
    """Tests argument checks"""
    with pytest.raises(InvalidArityError):
        extend([2, 3])
    with pytest.raises(OutOfRangeError):
        extend([1, 2, 3])


def test_replay():
    """Tests that a recorded split tree rebuilds the same chain"""
    orders = [7, 2, 4, 9, 3, 3]
    result = extend(orders)
    _assert_chain(result, orders)
    assert replay(orders, result.split_tree) == result

    with pytest.raises(InvalidArityError):
        replay(orders[:5], result.split_tree)


def test_degree_six_table():
    """Tests the S_6 fallback table"""
    table = degree_six_table()
    assert (3, 3, 4) in table
    assert (4, 4, 4) in table
    for orders, (x, y, z) in table.items():
        assert (x.order(), y.order(), z.order()) == orders
        assert x.degree == 6
        assert product([x, y, z]).is_identity()


@pytest.mark.slow
def test_random_chains():
    """Tests random order lists"""
    rng = random.Random(2024)
    for _ in range(500):
        orders = [rng.randint(2, 25) for _ in range(rng.randint(3, 8))]
        _assert_chain(extend(orders), orders)
