# models/cycle_types.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents cycle types (partitions of the degree) and the conjugacy classes they name.

"""
from __future__ import annotations

import math
from collections import Counter
from functools import reduce
from itertools import permutations as arrangements
from typing import Iterator, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from permprod.exceptions import OutOfRangeError
from permprod.models.permutation import Permutation


class CycleType:
    """A partition of the degree listing every cycle length, fixed points included."""

    __slots__ = ("_parts", "_degree")

    def __init__(self, parts: Sequence[int], degree: int = None) -> None:
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if any(p < 1 for p in parts):
            raise OutOfRangeError(f"Cycle lengths must be positive: {parts}")
        total = sum(parts)
        degree = total if degree is None else degree
        if total != degree or degree < 1:
            raise OutOfRangeError(
                f"Parts {parts} do not sum to the degree {degree}",
                {"parts": list(parts), "degree": degree},
            )
        self._parts = parts
        self._degree = degree

    @classmethod
    def padded(cls, parts: Sequence[int], degree: int) -> CycleType:
        """
        Builds a cycle type from its non-trivial parts, filling up with fixed points.

        Args:
            parts (Sequence): Cycle lengths, fixed points may be omitted.
            degree (int): The degree.

        Returns:
            CycleType: The padded cycle type.
        """
        parts = [p for p in parts if p > 1]
        return cls(parts + [1] * (degree - sum(parts)), degree)

    @property
    def parts(self) -> tuple:
        """(tuple): The cycle lengths in descending order."""
        return self._parts

    @property
    def degree(self) -> int:
        """(int): The sum of the parts."""
        return self._degree

    @property
    def nontrivial(self) -> tuple:
        """(tuple): The parts larger than one."""
        return tuple(p for p in self._parts if p > 1)

    @property
    def index(self) -> int:
        """(int): The degree minus the number of parts."""
        return self._degree - len(self._parts)

    @property
    def order(self) -> int:
        """(int): The order of the elements of the class, the lcm of the parts."""
        return reduce(math.lcm, self._parts, 1)

    def count(self, length: int) -> int:
        """Returns the number of cycles of the given length."""
        return self._parts.count(length)

    def is_fixed_point_free_involution(self) -> bool:
        """(bool): Whether every part is 2."""
        return all(p == 2 for p in self._parts)

    def class_size(self) -> int:
        """(int): The number of elements of S_n with this cycle type."""
        size = math.factorial(self._degree)
        for length, multiplicity in Counter(self._parts).items():
            size //= length**multiplicity * math.factorial(multiplicity)
        return size

    def representative(self) -> Permutation:
        """
        The element with consecutive cycles, longest first.

        Returns:
            Permutation: (1..p1)(p1+1..p1+p2)...
        """
        cycles = []
        start = 1
        for part in self._parts:
            cycles.append(range(start, start + part))
            start += part
        return Permutation.from_cycles(cycles, self._degree)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CycleType)
            and self._degree == other._degree
            and self._parts == other._parts
        )

    def __hash__(self) -> int:
        return hash((self._parts, self._degree))

    def __repr__(self) -> str:
        return f"CycleType({list(self._parts)})"

    def __str__(self) -> str:
        ones = self.count(1)
        labels = [str(p) for p in self.nontrivial]
        if ones:
            labels.append("1" if ones == 1 else f"1^{ones}")
        return "{" + ",".join(labels) + "}"


class ClassSpec(BaseModel):
    """A conjugacy class of S_n named by its degree and cycle type."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    degree: int
    """(int): The degree n."""
    cycle_type: CycleType
    """(CycleType): The cycle type of the class elements."""

    @model_validator(mode="after")
    def _degrees_agree(self) -> ClassSpec:
        if self.cycle_type.degree != self.degree:
            raise ValueError(
                f"Cycle type degree {self.cycle_type.degree} differs from {self.degree}"
            )
        return self

    @classmethod
    def of(cls, parts: Sequence[int], degree: int) -> ClassSpec:
        """
        Builds a class from its non-trivial cycle lengths.

        Args:
            parts (Sequence): The cycle lengths, fixed points may be omitted.
            degree (int): The degree.

        Returns:
            ClassSpec: The class.
        """
        return cls(degree=degree, cycle_type=CycleType.padded(parts, degree))

    @property
    def index(self) -> int:
        """(int): The index of the class elements."""
        return self.cycle_type.index

    def __str__(self) -> str:
        return f"{self.cycle_type} in S_{self.degree}"


def uniform_class(length: int, span: int, degree: int = None) -> ClassSpec:
    """
    The class of floor(span/length) cycles of the given length and fixed points.

    Args:
        length (int): The cycle length.
        span (int): The number of points the cycles are packed into.
        degree (`int`, optional): The degree of the class. Defaults to ``span``.

    Returns:
        ClassSpec: The class.
    """
    degree = span if degree is None else degree
    return ClassSpec.of([length] * (span // length), degree)


def partitions(n: int, largest: int = None) -> Iterator[tuple]:
    """
    Generates the partitions of n in descending order, each as a descending tuple.

    Args:
        n (int): The number partitioned.
        largest (`int`, optional): Upper bound for the parts.

    Yields:
        tuple: A partition.
    """
    largest = n if largest is None else min(largest, n)
    if n == 0:
        yield ()
        return
    for first in range(largest, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def order_cycle_types(degree: int, order: int) -> list:
    """
    The cycle types of S_degree whose elements have the given order.

    Args:
        degree (int): The degree.
        order (int): The element order.

    Returns:
        list: CycleType instances, in partition order.
    """
    return [
        CycleType(parts, degree)
        for parts in partitions(degree)
        if reduce(math.lcm, parts, 1) == order
    ]


def class_elements(cycle_type: CycleType) -> Iterator[Permutation]:
    """
    Generates every element of a conjugacy class exactly once.

    The smallest unused point always opens the next cycle, the remaining points of
    the cycle are an ordered choice from the unused points.

    Args:
        cycle_type (CycleType): The class.

    Yields:
        Permutation: The elements.
    """
    degree = cycle_type.degree
    images = [0] * degree

    def place(unused: list, remaining: Counter) -> Iterator[Permutation]:
        if not unused:
            yield Permutation(list(images), check=False)
            return
        start, rest = unused[0], unused[1:]
        for length in sorted(remaining, reverse=True):
            if not remaining[length]:
                continue
            remaining[length] -= 1
            for tail in arrangements(rest, length - 1):
                cycle = (start,) + tail
                for i, point in enumerate(cycle):
                    images[point - 1] = cycle[(i + 1) % length]
                left = [p for p in rest if p not in tail]
                yield from place(left, remaining)
            remaining[length] += 1

    yield from place(list(range(1, degree + 1)), Counter(cycle_type.parts))
