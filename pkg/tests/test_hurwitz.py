import pytest
from permprod.models import (
    ClassSpec,
    CycleType,
    Permutation,
    class_elements,
    compose,
    is_transitive,
    partitions,
)
from permprod.reports import NecessityVerdict, genus, index_sum, necessity_check, ramification
from permprod.exceptions import DegreeMismatchError, OutOfRangeError, ProductNotIdentityError


def test_genus_of_sphere_covers(exceptional_pair):
    """Tests that the solved triples give genus zero covers"""
    t = Permutation.parse("(1,2)")
    assert genus([t, t]) == [(frozenset({1, 2}), 0)]

    x, y = exceptional_pair
    assert genus([x, y, compose(x, y).inverse()]) == [(frozenset(range(1, 11)), 0)]

    x, y = Permutation.parse("(1,2,3,4)@6"), Permutation.parse("(3,1,5,6)")
    assert genus([x, y, compose(x, y).inverse()]) == [(frozenset(range(1, 7)), 0)]


def test_genus_per_component():
    """Tests that each orbit is a separate component"""
    swap = Permutation.parse("(1,2)@4")
    assert genus([swap] * 4) == [
        (frozenset({1, 2}), 1),
        (frozenset({3}), 0),
        (frozenset({4}), 0),
    ]

    x, y = Permutation.parse("(1,2)@4"), Permutation.parse("(3,4)")
    assert genus([x, y, Permutation.parse("(1,2)(3,4)")]) == [
        (frozenset({1, 2}), 0),
        (frozenset({3, 4}), 0),
    ]


def test_genus_rejects_bad_tuples():
    """Tests that only product one tuples have a genus"""
    with pytest.raises(ProductNotIdentityError):
        genus([Permutation.parse("(1,2)@3"), Permutation.parse("(2,3)")])
    with pytest.raises(OutOfRangeError):
        genus([])


def test_ramification(exceptional_pair):
    """Tests the ramification indices over each branch point"""
    x, y = exceptional_pair
    z = compose(x, y).inverse()
    assert ramification([x, y, z]) == [(3, 3, 3, 1), (5, 1, 1, 1, 1, 1), (8, 2)]
    assert index_sum([x, y, z]) == 18


def test_necessity_check():
    """Tests the index conditions for a transitive realization"""
    transpositions = ClassSpec.of([2], 3)
    assert necessity_check([transpositions] * 3) == NecessityVerdict.PARITY_FAIL
    assert necessity_check([transpositions] * 4) == NecessityVerdict.ADMISSIBLE
    assert necessity_check([ClassSpec.of([2], 4)] * 4) == NecessityVerdict.GENUS_FAIL
    assert necessity_check([ClassSpec.of([3], 3)] * 2) == NecessityVerdict.ADMISSIBLE

    with pytest.raises(DegreeMismatchError):
        necessity_check([ClassSpec.of([2], 3), ClassSpec.of([2], 4)])
    with pytest.raises(OutOfRangeError):
        necessity_check([])


@pytest.mark.slow
def test_transitive_triples_have_nonnegative_genus():
    """Tests every transitive product one triple up to S_8, x up to conjugacy"""
    for n in range(1, 9):
        elements = [y for p in partitions(n) for y in class_elements(CycleType(p))]
        for p in partitions(n):
            x = CycleType(p).representative()
            for y in elements:
                if not is_transitive([x, y]):
                    continue
                triple = [x, y, compose(x, y).inverse()]
                ((_, value),) = genus(triple)
                assert value >= 0
                assert necessity_check(
                    [ClassSpec(degree=n, cycle_type=e.cycle_type()) for e in triple]
                ) == NecessityVerdict.ADMISSIBLE
