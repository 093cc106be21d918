# models/permutation.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents a permutation of the points 1..n with an explicit degree.

Products are read left to right: ``compose(p, q)`` applies ``p`` first, so
``compose(p, q)(i) == q(p(i))``. Fixed points are part of the value, which makes
``index`` and ``cycle_type`` depend on the degree.

"""
from __future__ import annotations

import math
import re
from collections import deque
from functools import lru_cache, reduce
from typing import Dict, Iterable, Sequence, Tuple

from strenum import StrEnum

from permprod.exceptions import (
    DegreeMismatchError,
    InvalidPermutationError,
    NotationError,
    OutOfRangeError,
    SupportOverlapError,
)

_NOTATION = re.compile(r"^\s*((?:\(\s*[\d,\s]*\)\s*)*)(?:@\s*(\d+))?\s*$")
_CYCLE = re.compile(r"\(([^)]*)\)")


class Side(StrEnum):
    """The side on which a glued cycle multiplies a permutation."""

    LEFT = "left"
    RIGHT = "right"


class Permutation:
    """An immutable bijection on {1, ..., n}."""

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Sequence[int], check: bool = True) -> None:
        images = tuple(images)
        if check:
            degree = len(images)
            if degree < 1 or sorted(images) != list(range(1, degree + 1)):
                raise InvalidPermutationError(
                    f"{list(images)} is not a bijection on 1..{degree}",
                    {"images": list(images)},
                )
        self._images = images
        self._hash = None

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        """
        The identity of the given degree.

        Args:
            degree (int): The number of points.

        Returns:
            Permutation: The identity.
        """
        if degree < 1:
            raise OutOfRangeError(f"Degree must be positive, got {degree}")
        return cls(range(1, degree + 1), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int = None) -> Permutation:
        """
        Builds a permutation from cycles, multiplied left to right.

        Args:
            cycles (iterable): Cycles as point sequences. Overlapping cycles are composed.
            degree (`int`, optional): The degree. Defaults to the largest point used.

        Returns:
            Permutation: The product of the cycles.
        """
        cycles = [tuple(c) for c in cycles]
        largest = max((max(c) for c in cycles if c), default=1)
        degree = largest if degree is None else degree
        if degree < largest:
            raise OutOfRangeError(f"Point {largest} exceeds degree {degree}")
        result = list(range(1, degree + 1))
        for cycle in cycles:
            if len(set(cycle)) != len(cycle) or any(p < 1 for p in cycle):
                raise InvalidPermutationError(f"{cycle} is not a cycle", {"cycle": cycle})
            if len(cycle) < 2:
                continue
            step = {cycle[i]: cycle[(i + 1) % len(cycle)] for i in range(len(cycle))}
            result = [step.get(v, v) for v in result]
        return cls(result, check=False)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """
        Parses cycle notation such as ``(1,2,3)(4,5)@7``; the identity is ``()@n``.

        Args:
            text (str): The notation. Without an ``@n`` suffix the degree is the largest point.

        Returns:
            Permutation: The parsed permutation.
        """
        match = _NOTATION.match(text)
        if not match:
            raise NotationError(f"Cannot parse '{text}'", {"text": text})
        cycles = []
        for body in _CYCLE.findall(match.group(1)):
            tokens = [t for t in re.split(r"[,\s]+", body.strip()) if t]
            cycles.append([int(t) for t in tokens])
        degree = int(match.group(2)) if match.group(2) else None
        if degree is None and not any(cycles):
            raise NotationError(f"The identity needs a degree suffix: '{text}'")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        """(int): The number of points."""
        return len(self._images)

    @property
    def images(self) -> tuple:
        """(tuple): Position i - 1 holds the image of point i."""
        return self._images

    def __call__(self, point: int) -> int:
        return self._images[point - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._images)
        return self._hash

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Permutation('{self}')"

    def __str__(self) -> str:
        body = "".join(f"({','.join(map(str, c))})" for c in self.cycles())
        return f"{body or '()'}@{self.degree}"

    def cycles(self, include_fixed: bool = False) -> list:
        """
        The disjoint cycles, each starting at its smallest point, ordered by that point.

        Args:
            include_fixed (bool): Whether to list fixed points as 1-cycles.

        Returns:
            list: The cycles as tuples.
        """
        images = self._images
        seen = bytearray(len(images) + 1)
        result = []
        for start in range(1, len(images) + 1):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = 1
            point = images[start - 1]
            while point != start:
                cycle.append(point)
                seen[point] = 1
                point = images[point - 1]
            if len(cycle) > 1 or include_fixed:
                result.append(tuple(cycle))
        return result

    def cycle_lengths(self) -> list:
        """(list): All cycle lengths including fixed points, in descending order."""
        images = self._images
        seen = bytearray(len(images) + 1)
        lengths = []
        for start in range(1, len(images) + 1):
            if seen[start]:
                continue
            length = 0
            point = start
            while not seen[point]:
                seen[point] = 1
                length += 1
                point = images[point - 1]
            lengths.append(length)
        lengths.sort(reverse=True)
        return lengths

    def cycle_type(self):
        """
        The canonical cycle type, fixed points included.

        Returns:
            CycleType: The partition of the degree.
        """
        from permprod.models.cycle_types import (  # pylint: disable=import-outside-toplevel
            CycleType,
        )

        return CycleType(self.cycle_lengths(), self.degree)

    def inverse(self) -> Permutation:
        """(Permutation): The inverse permutation."""
        inverse = [0] * len(self._images)
        for point, image in enumerate(self._images, start=1):
            inverse[image - 1] = point
        return Permutation(inverse, check=False)

    def order(self) -> int:
        """(int): The least m >= 1 with p^m the identity."""
        return reduce(math.lcm, self.cycle_lengths(), 1)

    def index(self) -> int:
        """(int): The degree minus the number of cycles, fixed points included."""
        return self.degree - len(self.cycle_lengths())

    def sign(self) -> int:
        """(int): +1 for even and -1 for odd permutations."""
        return -1 if self.index() % 2 else 1

    def fixed_points(self) -> list:
        """(list): The points mapped to themselves."""
        return [i for i, v in enumerate(self._images, start=1) if i == v]

    def support(self) -> frozenset:
        """(frozenset): The points moved."""
        return frozenset(i for i, v in enumerate(self._images, start=1) if i != v)

    def is_identity(self) -> bool:
        """(bool): Whether every point is fixed."""
        return all(i == v for i, v in enumerate(self._images, start=1))

    def power(self, exponent: int) -> Permutation:
        """
        Raises the permutation to an integer power.

        Args:
            exponent (int): The exponent, negative values use the inverse.

        Returns:
            Permutation: The power.
        """
        base = self if exponent >= 0 else self.inverse()
        result = Permutation.identity(self.degree)
        for _ in range(abs(exponent) % self.order()):
            result = compose(result, base)
        return result

    def restrict(self, points: Iterable[int]) -> list:
        """
        The cycles, fixed points included, lying in an invariant set of points.

        Args:
            points (iterable): A union of cycles, such as an orbit.

        Raises:
            OutOfRangeError: If the points are not invariant under the permutation.

        Returns:
            list: The cycles inside ``points``.
        """
        points = frozenset(points)
        if any(self(p) not in points for p in points):
            raise OutOfRangeError(f"{sorted(points)} is not invariant under {self}")
        return [c for c in self.cycles(include_fixed=True) if c[0] in points]


def _same_degree(*perms: Permutation) -> int:
    degrees = {p.degree for p in perms}
    if len(degrees) > 1:
        raise DegreeMismatchError(
            f"Degrees differ: {sorted(degrees)}", {"degrees": sorted(degrees)}
        )
    return degrees.pop()


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    The product applying ``p`` first, i.e. i -> q(p(i)).

    Args:
        p (Permutation): The left factor.
        q (Permutation): The right factor.

    Returns:
        Permutation: The product.
    """
    _same_degree(p, q)
    q_images = q.images
    return Permutation([q_images[i - 1] for i in p.images], check=False)


def product(perms: Sequence[Permutation]) -> Permutation:
    """
    The left to right product of a non-empty sequence.

    Args:
        perms (Sequence): The factors.

    Returns:
        Permutation: The product.
    """
    return reduce(compose, perms)


def inverse(p: Permutation) -> Permutation:
    """Returns the inverse of ``p``."""
    return p.inverse()


def order(p: Permutation) -> int:
    """Returns the order of ``p``, the lcm of its cycle lengths."""
    return p.order()


def index(p: Permutation) -> int:
    """Returns the degree of ``p`` minus its number of cycles."""
    return p.index()


def cycle_type(p: Permutation):
    """Returns the canonical cycle type of ``p``."""
    return p.cycle_type()


def orbits(perms: Sequence[Permutation]) -> list:
    """
    The orbits of the group generated by ``perms``.

    Args:
        perms (Sequence): Generators of a common degree.

    Returns:
        list: The orbits as frozensets, ordered by their smallest point.
    """
    if not perms:
        return []
    degree = _same_degree(*perms)
    parent = list(range(degree + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in perms:
        for point, image in enumerate(perm.images, start=1):
            root_a, root_b = find(point), find(image)
            if root_a != root_b:
                parent[max(root_a, root_b)] = min(root_a, root_b)

    groups = {}
    for point in range(1, degree + 1):
        groups.setdefault(find(point), set()).add(point)
    return [frozenset(groups[root]) for root in sorted(groups)]


def is_transitive(perms: Sequence[Permutation]) -> bool:
    """Whether the generated group has a single orbit."""
    return len(orbits(perms)) == 1


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """
    The conjugate g^-1 p g; the cycle (s1, ..., sk) of ``p`` becomes (g(s1), ..., g(sk)).

    Args:
        p (Permutation): The permutation conjugated.
        g (Permutation): The conjugating permutation.

    Returns:
        Permutation: The conjugate.
    """
    _same_degree(p, g)
    result = [0] * p.degree
    g_images = g.images
    for point, image in enumerate(p.images, start=1):
        result[g_images[point - 1] - 1] = g_images[image - 1]
    return Permutation(result, check=False)


def uniform_class_index(n: int, k: int) -> int:
    """
    The index of a permutation of degree n made of floor(n/k) k-cycles and fixed points.

    Args:
        n (int): The degree.
        k (int): The cycle length, 2 <= k <= n.

    Returns:
        int: floor(n/k) * (k - 1).
    """
    if not 2 <= k <= n:
        raise OutOfRangeError(f"Need 2 <= k <= n, got n={n}, k={k}", {"n": n, "k": k})
    return (n // k) * (k - 1)


def embed(p: Permutation, degree: int) -> Permutation:
    """
    Extends ``p`` to a larger degree, fixing the new points.

    Args:
        p (Permutation): The permutation.
        degree (int): The new degree, at least ``p.degree``.

    Returns:
        Permutation: The embedded permutation.
    """
    if degree < p.degree:
        raise OutOfRangeError(
            f"Cannot embed degree {p.degree} into degree {degree}",
            {"degree": p.degree, "target": degree},
        )
    if degree == p.degree:
        return p
    return Permutation(p.images + tuple(range(p.degree + 1, degree + 1)), check=False)


def attach_cycle(
    p: Permutation, fresh_cycle: Sequence[int], side: Side = Side.LEFT
) -> Permutation:
    """
    Multiplies ``p`` by a cycle meeting its support in at most one point.

    When the shared point lies on a cycle of ``p`` that cycle grows by
    ``len(fresh_cycle) - 1``; without a shared point the product is disjoint.

    Args:
        p (Permutation): The permutation, embedded upwards if the cycle needs more points.
        fresh_cycle (Sequence): The cycle's points in order.
        side (Side): LEFT multiplies as cycle * p, RIGHT as p * cycle.

    Returns:
        Permutation: The product.
    """
    shared = set(fresh_cycle) & p.support()
    if len(shared) > 1:
        raise SupportOverlapError(
            f"Cycle {tuple(fresh_cycle)} shares {sorted(shared)} with the permutation",
            {"shared": sorted(shared)},
        )
    degree = max(p.degree, max(fresh_cycle))
    base = embed(p, degree)
    cycle = Permutation.from_cycles([fresh_cycle], degree)
    return compose(cycle, base) if side == Side.LEFT else compose(base, cycle)


@lru_cache(maxsize=8)
def transposition_distances(degree: int) -> Dict[Tuple[int, ...], int]:
    """
    The distance from the identity of every element of S_degree in the transposition
    Cayley graph, by one breadth first search. Only practical for small degrees.

    Args:
        degree (int): The degree.

    Returns:
        dict: The distance of each image tuple.
    """
    start = tuple(range(1, degree + 1))
    pairs = [(i, j) for i in range(degree) for j in range(i + 1, degree)]
    distance = {start: 0}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for i, j in pairs:
            step = list(current)
            step[i], step[j] = step[j], step[i]
            step = tuple(step)
            if step not in distance:
                distance[step] = distance[current] + 1
                queue.append(step)
    return distance


def transposition_distance(p: Permutation) -> int:
    """
    The least number of transpositions whose product is ``p``.

    Args:
        p (Permutation): The permutation.

    Returns:
        int: The distance from the identity.
    """
    return transposition_distances(p.degree)[tuple(p.images)]
