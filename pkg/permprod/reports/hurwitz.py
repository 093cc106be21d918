# reports/hurwitz.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Riemann-Hurwitz arithmetic on monodromy tuples.

A tuple of permutations with product one describes a branched covering of the sphere,
one connected component per orbit of the generated group. A component over an orbit O
has genus g = -(|O| - 1) + 1/2 * sum of the indices of the tuple's elements restricted
to O.

"""
from __future__ import annotations

from typing import List, Sequence, Tuple

from strenum import StrEnum

from permprod.exceptions import (
    DegreeMismatchError,
    NonIntegralGenusError,
    OutOfRangeError,
    ProductNotIdentityError,
)
from permprod.models.cycle_types import ClassSpec
from permprod.models.permutation import Permutation, orbits, product


class NecessityVerdict(StrEnum):
    """Whether a class tuple passes the necessary conditions for a transitive realization."""

    ADMISSIBLE = "Admissible"
    PARITY_FAIL = "ParityFail"
    GENUS_FAIL = "GenusFail"


def genus(elements: Sequence[Permutation]) -> List[Tuple[frozenset, int]]:
    """
    The genus of every component of the covering described by a tuple.

    Args:
        elements (Sequence): Permutations of a common degree with product one.

    Raises:
        ProductNotIdentityError: If the product is not the identity.
        NonIntegralGenusError: If a component's genus is negative or not an integer.

    Returns:
        list: (orbit, genus) pairs ordered by the orbits' smallest points.
    """
    if not elements:
        raise OutOfRangeError("The tuple is empty")
    if not product(elements).is_identity():
        raise ProductNotIdentityError(
            f"{' * '.join(str(e) for e in elements)} is not the identity"
        )
    result = []
    for orbit in orbits(elements):
        size = len(orbit)
        indices = sum(size - len(e.restrict(orbit)) for e in elements)
        twice = indices - 2 * (size - 1)
        if twice < 0 or twice % 2:
            raise NonIntegralGenusError(
                f"Orbit {sorted(orbit)} has genus {twice / 2}",
                {"orbit": sorted(orbit), "index_sum": indices},
            )
        result.append((orbit, twice // 2))
    return result


def ramification(elements: Sequence[Permutation]) -> List[tuple]:
    """
    The ramification indices over each branch point.

    Args:
        elements (Sequence): The monodromy tuple.

    Returns:
        list: For each element, its cycle lengths in descending order, fixed points included.
    """
    return [tuple(e.cycle_lengths()) for e in elements]


def index_sum(elements: Sequence[Permutation]) -> int:
    """Returns the sum of the indices of the elements, even for any product one tuple."""
    return sum(e.index() for e in elements)


def necessity_check(classes: Sequence[ClassSpec]) -> NecessityVerdict:
    """
    Checks the index conditions a transitive product one tuple from the classes must meet.

    Args:
        classes (Sequence): Classes of a common degree n.

    Raises:
        DegreeMismatchError: If the degrees differ.

    Returns:
        NecessityVerdict: ParityFail for an odd index sum, GenusFail for an index sum
        below 2(n - 1), Admissible otherwise.
    """
    if not classes:
        raise OutOfRangeError("No classes given")
    degrees = {c.degree for c in classes}
    if len(degrees) > 1:
        raise DegreeMismatchError(f"Class degrees differ: {sorted(degrees)}")
    degree = degrees.pop()
    total = sum(c.index for c in classes)
    if total % 2:
        return NecessityVerdict.PARITY_FAIL
    if total < 2 * (degree - 1):
        return NecessityVerdict.GENUS_FAIL
    return NecessityVerdict.ADMISSIBLE
