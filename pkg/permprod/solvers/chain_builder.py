# solvers/chain_builder.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Builds product one tuples x_1, ..., x_r of prescribed orders in S_n, n = max + 2.

Triples come from the triple solver. Longer tuples are split in two halves, each
extended in front by an element of prime order p with n/2 < p <= n - 2. In S_n such an
element is a single p-cycle, so after dropping the heads the two halves multiply to
p-cycles, and one conjugation turns the right half's product into the inverse of the
left half's.

"""
from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from permprod.exceptions import (
    InvalidArityError,
    NoSuchPrimeError,
    OutOfRangeError,
    TypeMismatchError,
    VerificationError,
)
from permprod.models.chain_result import ChainResult, SplitNode
from permprod.models.permutation import Permutation, conjugate, embed, product
from permprod.solvers.oracle import SearchBudget, exhaustive_triple_search
from permprod.solvers.triple_solver import arrange_triple, solve
from permprod.utils import is_prime

logger = logging.getLogger(__name__)

SIX_POINT_PRIME = 5


def bertrand_prime(n: int) -> int:
    """
    The smallest prime p with n/2 < p <= n - 2.

    Args:
        n (int): The degree, 5 or at least 7.

    Raises:
        NoSuchPrimeError: If there is no such prime, as for n = 4 and n = 6.

    Returns:
        int: The prime.
    """
    for p in range(n // 2 + 1, n - 1):
        if is_prime(p):
            return p
    raise NoSuchPrimeError(f"No prime p with {n}/2 < p <= {n - 2}", {"n": n})


def align_to_inverse(elements: Sequence[Permutation], target: Permutation) -> list:
    """
    Conjugates a tuple by one permutation so that its product becomes target^-1.

    Args:
        elements (Sequence): The tuple.
        target (Permutation): The permutation whose inverse the product must equal.

    Raises:
        TypeMismatchError: If the product and target^-1 have different cycle types.

    Returns:
        list: The conjugated tuple.
    """
    current = product(elements)
    wanted = target.inverse()
    if current.cycle_type() != wanted.cycle_type():
        raise TypeMismatchError(
            f"Product type {current.cycle_type()} differs from {wanted.cycle_type()}"
        )
    ranked = lambda p: sorted(p.cycles(include_fixed=True), key=len, reverse=True)
    images = [0] * current.degree
    for source, image in zip(ranked(current), ranked(wanted)):
        for s, t in zip(source, image):
            images[s - 1] = t
    g = Permutation(images, check=False)
    return [conjugate(e, g) for e in elements]


@lru_cache(maxsize=None)
def degree_six_table() -> Dict[Tuple[int, int, int], tuple]:
    """
    Product one triples in S_6 for every sorted order triple with entries 2..5.

    Returns:
        dict: (a, b, c) to (x, y, z); orders without a witness in S_6 are absent.
    """
    budget = SearchBudget(max_degree=6, max_nodes=10**7, time_cap=600.0)
    table = {}
    for a in range(2, 6):
        for b in range(a, 6):
            for c in range(b, 6):
                witness = exhaustive_triple_search(6, a, b, c, budget)
                if witness is not None:
                    table[(a, b, c)] = witness
    return table


def _involutions(count: int) -> list:
    swap = Permutation.from_cycles([(1, 2)], 4)
    if count % 2 == 0:
        return [swap] * count
    head = [
        swap,
        Permutation.from_cycles([(3, 4)], 4),
        Permutation.from_cycles([(1, 2), (3, 4)], 4),
    ]
    return head + [swap] * (count - 3)


def _triple(orders: Sequence[int], degree: int) -> list:
    ranked = tuple(sorted(orders))
    result = solve(*ranked)
    if result.degree <= degree:
        triple = result.triple
    elif degree == 6 and ranked in degree_six_table():
        triple = degree_six_table()[ranked]
    else:
        raise VerificationError(
            f"No triple of orders {ranked} in S_{degree}", {"orders": list(ranked)}
        )
    return [embed(p, degree) for p in arrange_triple(triple, ranked, orders)]


def _build(
    orders: List[int], degree: int, plan: Optional[SplitNode] = None
) -> Tuple[list, Optional[SplitNode]]:
    if degree == 4:
        return _involutions(len(orders)), None
    if len(orders) == 3:
        return _triple(orders, degree), None

    if plan is None:
        prime = SIX_POINT_PRIME if degree == 6 else bertrand_prime(degree)
        half = len(orders) // 2
    else:
        prime, half = plan.prime, len(plan.left_indices)
        if half + len(plan.right_indices) != len(orders):
            raise InvalidArityError(f"Split {plan.to_dict()} does not fit {len(orders)} orders")
    left, left_plan = _build(
        [prime] + orders[:half], degree, plan.left if plan else None
    )
    right, right_plan = _build(
        [prime] + orders[half:], degree, plan.right if plan else None
    )
    left_tail, right_tail = left[1:], right[1:]
    right_tail = align_to_inverse(right_tail, product(left_tail))
    logger.debug("Split %s at prime %d in S_%d", orders, prime, degree)
    node = SplitNode(
        prime=prime,
        left_indices=tuple(range(half)),
        right_indices=tuple(range(half, len(orders))),
        left=left_plan,
        right=right_plan,
    )
    return left_tail + right_tail, node


def _check(orders: Sequence[int]) -> List[int]:
    orders = list(orders)
    if len(orders) < 3:
        raise InvalidArityError(
            f"At least three orders are needed, got {len(orders)}", {"orders": orders}
        )
    if any(not isinstance(a, int) or a < 2 for a in orders):
        raise OutOfRangeError(f"Orders must be integers of at least 2: {orders}")
    return orders


def _verified(orders: List[int], elements: list, tree: Optional[SplitNode]) -> ChainResult:
    if not product(elements).is_identity():
        raise VerificationError(f"The chain for {orders} does not multiply to one")
    for position, (element, wanted) in enumerate(zip(elements, orders)):
        if element.order() != wanted:
            raise VerificationError(
                f"Element {position} has order {element.order()}, expected {wanted}"
            )
    return ChainResult(elements=tuple(elements), orders=tuple(orders), split_tree=tree)


def extend(orders: Sequence[int]) -> ChainResult:
    """
    Finds x_1, ..., x_r of the given orders in S_(max + 2) with x_1 ... x_r = 1.

    Args:
        orders (Sequence): The orders a_1, ..., a_r, r >= 3, each at least 2.

    Raises:
        InvalidArityError: If fewer than three orders are given.
        OutOfRangeError: If an order is below 2.

    Returns:
        ChainResult: The verified chain and the splits used.
    """
    orders = _check(orders)
    degree = max(orders) + 2
    elements, tree = _build(orders, degree)
    return _verified(orders, elements, tree)


def replay(orders: Sequence[int], split_tree: Optional[SplitNode]) -> ChainResult:
    """
    Rebuilds a chain following a recorded split tree.

    Args:
        orders (Sequence): The orders.
        split_tree (`SplitNode`, optional): The splits recorded by :func:`extend`.

    Returns:
        ChainResult: The chain, identical to the recorded one.
    """
    orders = _check(orders)
    degree = max(orders) + 2
    elements, tree = _build(orders, degree, split_tree)
    return _verified(orders, elements, tree)
