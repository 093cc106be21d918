# solvers/oracle.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Brute force searches used as ground truth for the constructive solvers.

The first factor is reduced to one representative per conjugacy class, which loses no
witness: conjugating a witness by any permutation gives another witness. The second factor
runs over whole classes. Every search counts the candidates it examines against a
:class:`SearchBudget`; an exhausted budget raises
:class:`~permprod.exceptions.BudgetExceededError`, so a returned ``None`` always means a
complete search found nothing.

"""
from __future__ import annotations

import logging
import time
from typing import Iterator, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from permprod.config import config
from permprod.exceptions import BudgetExceededError, DegreeMismatchError
from permprod.models.cycle_types import (
    ClassSpec,
    CycleType,
    class_elements,
    order_cycle_types,
)
from permprod.models.permutation import Permutation, compose, is_transitive
from permprod.models.realization import Variant
from permprod.utils import is_prime

logger = logging.getLogger(__name__)

Triple = Tuple[Permutation, Permutation, Permutation]


class SearchBudget(BaseModel):
    """Limits on a brute force search."""

    model_config = ConfigDict(frozen=True)

    max_degree: int = Field(gt=0)
    """(int): The largest degree searched."""
    max_nodes: int = Field(gt=0, lt=2**64)
    """(int): The largest number of candidates examined."""
    time_cap: float = Field(gt=0)
    """(float): Wall clock limit in seconds."""

    @classmethod
    def default(cls) -> SearchBudget:
        """
        The configured budget.

        Returns:
            SearchBudget: The budget from the ``[oracle]`` configuration.
        """
        return cls(**config.oracle)


class _Meter:
    """Counts examined candidates against a budget."""

    def __init__(self, budget: SearchBudget) -> None:
        self.budget = budget
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_cap

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceededError(
                f"Examined more than {self.budget.max_nodes} candidates",
                {"nodes": self.nodes},
            )
        if not self.nodes % 4096 and time.monotonic() > self.deadline:
            raise BudgetExceededError(
                f"Exceeded the time cap of {self.budget.time_cap}s", {"nodes": self.nodes}
            )


def _check_degree(degree: int, budget: SearchBudget) -> None:
    if degree > budget.max_degree:
        raise BudgetExceededError(
            f"Degree {degree} exceeds the search limit {budget.max_degree}",
            {"degree": degree, "max_degree": budget.max_degree},
        )


def minimal_order_degree(order: int) -> int:
    """
    The least n such that S_n has an element of the given order.

    Args:
        order (int): The order.

    Returns:
        int: The sum of the prime power factors of the order, 1 for order 1.
    """
    total, rest = 0, order
    for p in range(2, order + 1):
        if rest == 1:
            break
        if rest % p or not is_prime(p):
            continue
        power = 1
        while rest % p == 0:
            rest //= p
            power *= p
        total += power
    return max(total, 1)


def enumerate_triples(
    n: int, a: int, b: int, budget: SearchBudget = None
) -> Iterator[Triple]:
    """
    Generates (x, y, (x y)^-1) with x a class representative of order a and y any
    element of order b in S_n.

    Args:
        n (int): The degree.
        a (int): The order of x.
        b (int): The order of y.
        budget (`SearchBudget`, optional): Defaults to the configured budget.

    Yields:
        tuple: (x, y, z) with x y z = 1.
    """
    budget = budget or SearchBudget.default()
    _check_degree(n, budget)
    meter = _Meter(budget)
    y_types = order_cycle_types(n, b)
    for x_type in order_cycle_types(n, a):
        x = x_type.representative()
        for y_type in y_types:
            for y in class_elements(y_type):
                meter.tick()
                xy = compose(x, y)
                yield x, y, xy.inverse()


def exhaustive_triple_search(
    n: int, a: int, b: int, c: int, budget: SearchBudget = None
) -> Optional[Triple]:
    """
    Searches S_n for x, y, z of orders a, b, c with x y z = 1.

    Args:
        n (int): The degree.
        a (int): The order of x.
        b (int): The order of y.
        c (int): The order of z.
        budget (`SearchBudget`, optional): Defaults to the configured budget.

    Raises:
        BudgetExceededError: If the budget runs out before the search completes.

    Returns:
        tuple: A witness (x, y, z), or None if S_n has none.
    """
    for x, y, z in enumerate_triples(n, a, b, budget):
        if z.order() == c:
            return x, y, z
    return None


def min_degree(a: int, b: int, c: int, budget: SearchBudget = None) -> int:
    """
    The least n for which S_n holds x, y, z of orders a, b, c with x y z = 1.

    Args:
        a (int): The order of x.
        b (int): The order of y.
        c (int): The order of z.
        budget (`SearchBudget`, optional): Defaults to the configured budget.

    Raises:
        BudgetExceededError: If no witness exists up to the budget's degree, or the
            budget runs out.

    Returns:
        int: The minimal degree.
    """
    budget = budget or SearchBudget.default()
    start = max(minimal_order_degree(v) for v in (a, b, c))
    for n in range(start, budget.max_degree + 1):
        if exhaustive_triple_search(n, a, b, c, budget) is not None:
            return n
        logger.debug("No (%d, %d, %d) triple in S_%d", a, b, c, n)
    raise BudgetExceededError(
        f"No ({a}, {b}, {c}) triple up to degree {budget.max_degree}",
        {"orders": [a, b, c], "max_degree": budget.max_degree},
    )


def _same_degree(*classes: ClassSpec) -> int:
    degrees = {c.degree for c in classes}
    if len(degrees) > 1:
        raise DegreeMismatchError(f"Class degrees differ: {sorted(degrees)}")
    return degrees.pop()


def class_triple_realizable(
    c1: ClassSpec, c2: ClassSpec, c3: ClassSpec, budget: SearchBudget = None
) -> Optional[Triple]:
    """
    Searches for alpha in c1, beta in c2 with (alpha beta)^-1 in c3.

    Args:
        c1 (ClassSpec): The first class.
        c2 (ClassSpec): The second class.
        c3 (ClassSpec): The third class.
        budget (`SearchBudget`, optional): Defaults to the configured budget.

    Returns:
        tuple: (alpha, beta, gamma) with product one, or None.
    """
    budget = budget or SearchBudget.default()
    _check_degree(_same_degree(c1, c2, c3), budget)
    meter = _Meter(budget)
    alpha = c1.cycle_type.representative()
    for beta in class_elements(c2.cycle_type):
        meter.tick()
        gamma = compose(alpha, beta).inverse()
        if gamma.cycle_type() == c3.cycle_type:
            return alpha, beta, gamma
    return None


def _product_type(variant: Variant, degree: int) -> CycleType:
    if variant == Variant.FULL_CYCLE:
        return CycleType([degree])
    if variant == Variant.NEAR_CYCLE:
        return CycleType.padded([degree - 1], degree)
    return CycleType.padded([degree - 2, 2], degree)


def class_pair_realizable(
    c1: ClassSpec, c2: ClassSpec, variant: Variant, budget: SearchBudget = None
) -> Optional[Tuple[Permutation, Permutation]]:
    """
    Searches for alpha in c1, beta in c2 whose product has the variant's shape, with
    <alpha, beta> transitive for the near and split cycle variants.

    Args:
        c1 (ClassSpec): The class of alpha.
        c2 (ClassSpec): The class of beta.
        variant (Variant): The product shape.
        budget (`SearchBudget`, optional): Defaults to the configured budget.

    Returns:
        tuple: (alpha, beta), or None.
    """
    budget = budget or SearchBudget.default()
    degree = _same_degree(c1, c2)
    _check_degree(degree, budget)
    if variant != Variant.FULL_CYCLE and degree < (3 if variant == Variant.NEAR_CYCLE else 4):
        return None
    wanted = _product_type(variant, degree)
    meter = _Meter(budget)
    alpha = c1.cycle_type.representative()
    for beta in class_elements(c2.cycle_type):
        meter.tick()
        if compose(alpha, beta).cycle_type() != wanted:
            continue
        if variant == Variant.FULL_CYCLE or is_transitive([alpha, beta]):
            return alpha, beta
    return None


def full_double_search(
    n: int, a: int, b: int, c: int, budget: SearchBudget = None
) -> Optional[Triple]:
    """
    Searches every x of order a and every y of order b in S_n, without the class
    representative reduction.

    Args:
        n (int): The degree.
        a (int): The order of x.
        b (int): The order of y.
        c (int): The order of z.
        budget (`SearchBudget`, optional): Defaults to the configured budget.

    Returns:
        tuple: A witness (x, y, z), or None.
    """
    budget = budget or SearchBudget.default()
    _check_degree(n, budget)
    meter = _Meter(budget)
    xs = [x for t in order_cycle_types(n, a) for x in class_elements(t)]
    ys = [y for t in order_cycle_types(n, b) for y in class_elements(t)]
    for x in xs:
        for y in ys:
            meter.tick()
            z = compose(x, y).inverse()
            if z.order() == c:
                return x, y, z
    return None
