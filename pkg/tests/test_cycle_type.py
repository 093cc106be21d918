import math
import pytest
from pydantic import ValidationError
from permprod.models import (
    ClassSpec,
    CycleType,
    class_elements,
    order_cycle_types,
    partitions,
    uniform_class,
)
from permprod.exceptions import OutOfRangeError


def test_cycle_type_canonical_order():
    """Tests that cycle types compare in descending order with fixed points"""
    assert CycleType([1, 3, 2]) == CycleType([3, 2, 1])
    assert CycleType([2, 1, 1]) != CycleType([2, 2])
    assert CycleType.padded([3], 5) == CycleType([3, 1, 1])
    assert str(CycleType([8, 2])) == "{8,2}"
    assert str(CycleType([5, 1, 1, 1, 1, 1])) == "{5,1^5}"

    with pytest.raises(OutOfRangeError):
        CycleType([2, 2], 5)
    with pytest.raises(OutOfRangeError):
        CycleType([3, 0])


def test_cycle_type_invariants():
    """Tests index, order and the involution test"""
    assert CycleType([3, 3, 1]).index == 4
    assert CycleType([4, 6]).order == 12
    assert CycleType([2, 2, 2]).is_fixed_point_free_involution()
    assert not CycleType([2, 2, 1]).is_fixed_point_free_involution()
    assert CycleType([2, 1, 1]).class_size() == 6


def test_representative():
    """Tests the consecutive class representative"""
    representative = CycleType([3, 2, 1]).representative()
    assert str(representative) == "(1,2,3)(4,5)@6"
    assert representative.cycle_type() == CycleType([3, 2, 1])


def test_class_spec():
    """Tests class specifications"""
    spec = ClassSpec.of([3, 3], 7)
    assert spec.degree == 7
    assert spec.index == 4
    assert str(spec) == "{3,3,1} in S_7"
    assert uniform_class(3, 8) == ClassSpec.of([3, 3], 8)
    assert uniform_class(4, 6, 7).cycle_type == CycleType([4, 1, 1, 1])

    with pytest.raises(ValidationError):
        ClassSpec(degree=5, cycle_type=CycleType([2, 2]))


def test_partitions():
    """Tests the partition enumerator against the partition numbers"""
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for n, count in enumerate(counts):
        assert len(list(partitions(n))) == count
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_class_elements():
    """Tests that every class element is generated exactly once"""
    for n in range(1, 7):
        for parts in partitions(n):
            cycle_type = CycleType(parts)
            elements = list(class_elements(cycle_type))
            assert len(elements) == cycle_type.class_size()
            assert len(set(elements)) == len(elements)
            assert all(e.cycle_type() == cycle_type for e in elements)


def test_order_cycle_types():
    """Tests the cycle types of a given element order"""
    assert order_cycle_types(5, 6) == [CycleType([3, 2])]
    assert order_cycle_types(4, 2) == [CycleType([2, 2]), CycleType([2, 1, 1])]
    assert order_cycle_types(6, 7) == []
    for n in range(1, 8):
        total = sum(CycleType(p).class_size() for p in partitions(n))
        assert total == math.factorial(n)
