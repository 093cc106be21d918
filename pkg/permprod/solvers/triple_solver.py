# solvers/triple_solver.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Builds triples x, y, z with x y z = 1 and orders (a, b, c) in degree at most c + 2.

With 2 <= a <= b <= c, let A be the class of floor(c/a) a-cycles, B the class of
floor(c/b) b-cycles and C the class of c-cycles. The triple (A, B, C) is even when its
index sum is. The constructions are:

* even triples, and odd ones with c even and one of a, b even, not a = b = c, are
  realized in S_c from a full cycle product, the latter after adding a transposition to
  the even order class or dropping one of its cycles.
* odd triples with c odd and one of a, b even are realized in S_(c+1) from a near cycle
  product, the even order class carrying one extra transposition.
* the remaining triples have c even and either a, b odd or a = b = c. They are realized
  in S_(c+2) with z of type (c, 2): directly for small c, otherwise by gluing fresh
  cycles onto a solution for a smaller c at a point of z's c-cycle fixed by x or y.

"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from permprod.config import config
from permprod.exceptions import OutOfRangeError, VerificationError
from permprod.models.cycle_types import ClassSpec
from permprod.models.permutation import (
    Permutation,
    Side,
    attach_cycle,
    compose,
    conjugate,
    embed,
)
from permprod.models.realization import RealizationRequest
from permprod.models.solve_result import CaseTag, CaseVariant, Holder, SolveResult
from permprod.solvers.class_realizer import (
    realize_full_cycle,
    realize_near_cycle,
    relabel_fixed_point,
)
from permprod.utils import derive_seed

logger = logging.getLogger(__name__)

EVEN_TRIPLE_CASES = (
    CaseVariant.EVEN_TRIPLE,
    CaseVariant.EVEN_TRIPLE_DROP_CYCLE,
    CaseVariant.EVEN_TRIPLE_ADD_TRANSPOSITION,
)
RECURSIVE_CASES = (CaseVariant.C_EVEN_CASE2, CaseVariant.C_EVEN_CASE3)
C_EVEN_CASES = tuple(v for v in CaseVariant if v.is_c_even)


@dataclass
class VerificationReport:
    """The invariant violations found in a triple; truthy when there are none."""

    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """(bool): Whether the triple passed every check."""
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        """Convert the report to a dictionary."""
        return {"ok": self.ok, "violations": list(self.violations)}


def _check_orders(a: int, b: int, c: int) -> None:
    if not all(isinstance(v, int) for v in (a, b, c)) or not 2 <= a <= b <= c:
        raise OutOfRangeError(
            f"Orders must satisfy 2 <= a <= b <= c, got ({a}, {b}, {c})",
            {"orders": [a, b, c]},
        )


def _uniform_index(length: int, span: int) -> int:
    return (span // length) * (length - 1)


def _seed(a: int, b: int, c: int) -> int:
    return derive_seed((a, b, c), config.solver["seed"])


def c_even_subcase(a: int, b: int, c: int) -> CaseVariant:
    """
    The construction for a and b odd and c even.

    Args:
        a (int): The smallest order, odd.
        b (int): The middle order, odd.
        c (int): The largest order, even.

    Returns:
        CaseVariant: One of the CEven_Case* variants.
    """
    if 2 * b > c + 1:
        if a == b == c // 2 + 1:
            return CaseVariant.C_EVEN_CASE1_EXCEPTION_HALF
        if (a, b, c) == (3, 5, 8):
            return CaseVariant.C_EVEN_CASE1_EXCEPTION_358
        return CaseVariant.C_EVEN_CASE1
    if c < 2 * b + a - 2:
        return CaseVariant.C_EVEN_CASE2
    return CaseVariant.C_EVEN_CASE3


def _base_orders(variant: CaseVariant, a: int, b: int, c: int) -> Tuple[int, int, int]:
    if variant == CaseVariant.C_EVEN_CASE2:
        return a, b, c - (a - 1)
    return a, b, c - (a + b - 2)


def _even_order(a: int, b: int) -> int:
    return a if a % 2 == 0 else b


def _top_variant(a: int, b: int, c: int) -> CaseVariant:
    total = _uniform_index(a, c) + _uniform_index(b, c) + (c - 1)
    if total % 2 == 0:
        return CaseVariant.EVEN_TRIPLE
    if c % 2 == 0 and (a % 2 == 0 or b % 2 == 0) and not a == b == c:
        if c % _even_order(a, b):
            return CaseVariant.EVEN_TRIPLE_ADD_TRANSPOSITION
        return CaseVariant.EVEN_TRIPLE_DROP_CYCLE
    if a == b == c:
        return CaseVariant.C_EVEN_ALL_EQUAL
    if a % 2 == 0 or b % 2 == 0:
        return CaseVariant.ODD_WITH_EVEN
    return c_even_subcase(a, b, c)


def classify(a: int, b: int, c: int) -> CaseTag:
    """
    Determines the construction for an order triple.

    Args:
        a (int): The order of x.
        b (int): The order of y.
        c (int): The order of z.

    Raises:
        OutOfRangeError: Unless 2 <= a <= b <= c.

    Returns:
        CaseTag: The case and the triples visited by its recursion, the input first.
    """
    _check_orders(a, b, c)
    variant = _top_variant(a, b, c)
    trace = [(a, b, c)]
    current = variant
    while current in RECURSIVE_CASES:
        trace.append(_base_orders(current, *trace[-1]))
        current = c_even_subcase(*trace[-1])
    return CaseTag(variant=variant, recursion_trace=tuple(trace))


def _require(tag: CaseTag, allowed: Sequence[CaseVariant]) -> None:
    if tag.variant not in allowed:
        raise OutOfRangeError(
            f"Orders {tag.recursion_trace[0]} are handled by {tag.variant}",
            {"case": str(tag.variant)},
        )


def _big_cycle_fixed_point(p: Permutation, z: Permutation, length: int) -> Optional[int]:
    points = [q for cycle in z.cycles() if len(cycle) == length for q in cycle]
    fixed = [q for q in points if p(q) == q]
    return min(fixed) if fixed else None


def _fixed_point_record(
    x: Permutation, y: Permutation, z: Permutation, c: int
) -> Optional[Tuple[Holder, int]]:
    for holder, element in ((Holder.X, x), (Holder.Y, y)):
        point = _big_cycle_fixed_point(element, z, c)
        if point is not None:
            return holder, point
    return None


def solve_even_triple(a: int, b: int, c: int) -> SolveResult:
    """
    Realizes an even triple, or an odd one with c even and a or b even, in S_c.

    An odd triple changes the class of its even order, that of a when both are even, by
    one transposition or one cycle less. Either fixes the parity of the index sum.

    Args:
        a (int): The order of x.
        b (int): The order of y.
        c (int): The order of z.

    Returns:
        SolveResult: x in A, y in B (one of them modified), z^-1 = (1, ..., c).
    """
    tag = classify(a, b, c)
    _require(tag, EVEN_TRIPLE_CASES)
    a_parts, b_parts = [a] * (c // a), [b] * (c // b)
    holder = Holder.NONE
    if tag.variant != CaseVariant.EVEN_TRIPLE:
        even = _even_order(a, b)
        parts, slot = (a_parts, Holder.X) if even == a else (b_parts, Holder.Y)
        if tag.variant == CaseVariant.EVEN_TRIPLE_ADD_TRANSPOSITION:
            if c - sum(parts) < 2:
                raise VerificationError(
                    f"The class of {even}-cycles in S_{c} has no room for a transposition"
                )
            parts.append(2)
            holder = slot
        else:
            parts.pop()

    witness = realize_full_cycle(
        RealizationRequest(
            c1=ClassSpec.of(a_parts, c),
            c2=ClassSpec.of(b_parts, c),
            seed=_seed(a, b, c),
        )
    )
    return SolveResult(
        x=witness.alpha,
        y=witness.beta,
        z=witness.product.inverse(),
        orders=(a, b, c),
        case=tag,
        exceptional_transposition_holder=holder,
    )


def solve_odd_with_even(a: int, b: int, c: int) -> SolveResult:
    """
    Realizes an odd triple with exactly one of a, b even in S_(c+1).

    Args:
        a (int): The order of x.
        b (int): The order of y.
        c (int): The order of z, odd.

    Returns:
        SolveResult: z a c-cycle fixing c + 1, the even order element carrying an extra
        transposition.
    """
    tag = classify(a, b, c)
    _require(tag, (CaseVariant.ODD_WITH_EVEN,))
    degree = c + 1
    a_parts, b_parts = [a] * (c // a), [b] * (c // b)
    if a % 2 == 0:
        a_parts.append(2)
        holder = Holder.X
    else:
        b_parts.append(2)
        holder = Holder.Y

    witness = realize_near_cycle(
        RealizationRequest(
            c1=ClassSpec.of(a_parts, degree),
            c2=ClassSpec.of(b_parts, degree),
            seed=_seed(a, b, c),
        )
    )
    return SolveResult(
        x=witness.alpha,
        y=witness.beta,
        z=witness.product.inverse(),
        orders=(a, b, c),
        case=tag,
        exceptional_transposition_holder=holder,
    )


def _all_equal(c: int) -> Tuple[Permutation, Permutation]:
    if c == 2:
        return (
            Permutation.from_cycles([(1, 2)], 4),
            Permutation.from_cycles([(3, 4)], 4),
        )
    degree = c + 2
    x = Permutation.from_cycles([range(1, c + 1)], degree)
    y = Permutation.from_cycles(
        [list(range(1, c - 3)) + [c - 1, c - 3, c + 1, c + 2]], degree
    )
    return x, y


def _exception_half(a: int) -> Tuple[Permutation, Permutation]:
    degree = 2 * a
    x = Permutation.from_cycles([range(1, a + 1), range(a + 1, 2 * a + 1)], degree)
    y = Permutation.from_cycles([list(range(1, a - 1)) + [2 * a, 2 * a - 2]], degree)
    return x, y


def _exception_358() -> Tuple[Permutation, Permutation]:
    x = Permutation.from_cycles([(1, 2, 3), (4, 5, 6), (7, 8, 9)], 10)
    y = Permutation.from_cycles([(1, 4, 8, 9, 10)], 10)
    return x, y


def _case1(a: int, b: int, c: int) -> Tuple[Permutation, Permutation]:
    degree = c + 1
    witness = realize_near_cycle(
        RealizationRequest(
            c1=ClassSpec.of([a] * (c // a), degree),
            c2=ClassSpec.of([b - 1], degree),
            seed=_seed(a, b, c),
        )
    )
    witness = relabel_fixed_point(witness, degree)
    x = embed(witness.alpha, degree + 1)
    y = attach_cycle(witness.beta, (degree, degree + 1), Side.RIGHT)
    return x, y


def reversed_triple(result: SolveResult) -> SolveResult:
    """
    The triple (y^-1, x^-1, z^-1), again with product one.

    Args:
        result (SolveResult): The triple.

    Returns:
        SolveResult: The reversed triple, orders (b, a, c), X and Y records exchanged.
    """
    a, b, c = result.orders
    fixed = result.fixed_point_on_big_cycle
    return SolveResult(
        x=result.y.inverse(),
        y=result.x.inverse(),
        z=result.z.inverse(),
        orders=(b, a, c),
        case=result.case,
        exceptional_transposition_holder=result.exceptional_transposition_holder.swapped(),
        fixed_point_on_big_cycle=None if fixed is None else (fixed[0].swapped(), fixed[1]),
    )


def glue_pair(
    result: SolveResult, left_length: int, right_length: int = 0
) -> Tuple[Permutation, Permutation, Permutation]:
    """
    Grows the c-cycle of z by gluing fresh cycles at a point of it fixed by x.

    A cycle of ``left_length`` through the fixed point d and fresh points multiplies x on
    the left; with ``right_length`` a second fresh cycle, starting at the last point of
    the first, multiplies y on the right. When only y fixes a point of the c-cycle the
    triple is reversed, glued with the lengths exchanged and reversed back.

    Args:
        result (SolveResult): A triple whose z has a c-cycle.
        left_length (int): The length of the cycle joining x.
        right_length (int): The length of the cycle joining y, 0 for none.

    Raises:
        VerificationError: If neither x nor y fixes a point of the c-cycle, or only y
            does and the gluing is not symmetric.

    Returns:
        tuple: (x, y, z) of the enlarged degree.
    """
    a, b, c = result.orders
    x, y, z = result.triple
    point = _big_cycle_fixed_point(x, z, c)
    flipped = point is None
    if flipped:
        if not right_length and a != b:
            raise VerificationError(
                f"Only y fixes a point of the {c}-cycle in a triple with a != b",
                {"orders": [a, b, c]},
            )
        x, y, z = y.inverse(), x.inverse(), z.inverse()
        if right_length:
            left_length, right_length = right_length, left_length
        point = _big_cycle_fixed_point(x, z, c)
        if point is None:
            raise VerificationError(
                f"No element fixes a point of the {c}-cycle", {"orders": [a, b, c]}
            )

    start = x.degree + 1
    left = (point,) + tuple(range(start, start + left_length - 1))
    x = attach_cycle(x, left, Side.LEFT)
    if right_length:
        right = tuple(range(left[-1], left[-1] + right_length))
        y = attach_cycle(y, right, Side.RIGHT)
        x = embed(x, y.degree)
    else:
        y = embed(y, x.degree)
    z = compose(x, y).inverse()
    logger.debug("Glued %s at %d onto a degree %d triple", left, point, result.degree)
    if flipped:
        x, y, z = y.inverse(), x.inverse(), z.inverse()
    return x, y, z


def solve_c_even(a: int, b: int, c: int) -> SolveResult:
    """
    Realizes c even with a, b odd or a = b = c in S_(c+2), z of type (c, 2).

    Args:
        a (int): The order of x.
        b (int): The order of y.
        c (int): The order of z, even.

    Returns:
        SolveResult: The triple, with a point of z's c-cycle fixed by x or y.
    """
    tag = classify(a, b, c)
    _require(tag, C_EVEN_CASES)
    variant = tag.variant
    if variant == CaseVariant.C_EVEN_ALL_EQUAL:
        x, y = _all_equal(c)
    elif variant == CaseVariant.C_EVEN_CASE1_EXCEPTION_HALF:
        x, y = _exception_half(a)
    elif variant == CaseVariant.C_EVEN_CASE1_EXCEPTION_358:
        x, y = _exception_358()
    elif variant == CaseVariant.C_EVEN_CASE1:
        x, y = _case1(a, b, c)
    else:
        base = solve_c_even(*tag.recursion_trace[1])
        if variant == CaseVariant.C_EVEN_CASE2:
            x, y, _ = glue_pair(base, a)
        else:
            x, y, _ = glue_pair(base, a, b)

    z = compose(x, y).inverse()
    fixed = _fixed_point_record(x, y, z, c)
    if fixed is None:
        raise VerificationError(
            f"No point of the {c}-cycle is fixed by x or y", {"orders": [a, b, c]}
        )
    return SolveResult(
        x=x,
        y=y,
        z=z,
        orders=(a, b, c),
        case=tag,
        exceptional_transposition_holder=Holder.Z,
        fixed_point_on_big_cycle=fixed,
    )


def _transposition_slots(result: SolveResult) -> Tuple[List[str], List[Holder]]:
    a, b, c = result.orders
    violations, extra = [], []
    for holder, element, length in ((Holder.X, result.x, a), (Holder.Y, result.y, b)):
        others = sorted(p for p in element.cycle_type().nontrivial if p != length)
        if others and others != [2]:
            violations.append(
                f"{holder.value.lower()} has cycles of lengths {others} besides {length}-cycles"
            )
        elif others == [2] and length != 2:
            extra.append(holder)
    z_parts = list(result.z.cycle_type().nontrivial)
    if z_parts not in ([c], sorted([c, 2], reverse=True)):
        violations.append(f"z has cycle type {result.z.cycle_type()}, expected ({c}) or ({c}, 2)")
    elif len(z_parts) == 2:
        extra.append(Holder.Z)
    return violations, extra


def verify_structure(result: SolveResult) -> VerificationReport:
    """
    Re-checks every structural property of a triple from scratch.

    Args:
        result (SolveResult): The triple.

    Returns:
        VerificationReport: All violations found, empty for a valid triple.
    """
    report = VerificationReport()
    violations = report.violations
    x, y, z = result.triple
    a, b, c = result.orders
    if len({x.degree, y.degree, z.degree}) > 1:
        violations.append(f"Degrees differ: {x.degree}, {y.degree}, {z.degree}")
        return report
    degree = x.degree
    if degree > max(result.orders) + 2:
        violations.append(f"Degree {degree} exceeds {max(result.orders) + 2}")
    if not compose(compose(x, y), z).is_identity():
        violations.append("x y z is not the identity")
    for name, element, expected in (("x", x, a), ("y", y, b), ("z", z, c)):
        if element.order() != expected:
            violations.append(f"order({name}) = {element.order()}, expected {expected}")

    shape, extra = _transposition_slots(result)
    violations.extend(shape)
    if len(extra) > 1:
        violations.append(f"Extra transpositions in {[h.value for h in extra]}")
    holder = result.exceptional_transposition_holder
    undetectable = (holder == Holder.X and a == 2) or (holder == Holder.Y and b == 2)
    if extra and holder not in extra:
        violations.append(f"Extra transposition recorded in {holder}, found in {extra[0]}")
    elif not extra and holder != Holder.NONE and not undetectable:
        violations.append(f"Extra transposition recorded in {holder} but none found")

    fixed = result.fixed_point_on_big_cycle
    if fixed is not None:
        slot, point = fixed
        element = {Holder.X: x, Holder.Y: y}.get(slot)
        big = {q for cycle in z.cycles() if len(cycle) == c for q in cycle}
        if element is None or not 1 <= point <= degree:
            violations.append(f"Invalid fixed point record {slot}, {point}")
        elif element(point) != point or point not in big:
            violations.append(f"{slot} does not fix {point} on the {c}-cycle of z")
    elif result.case.variant.is_c_even:
        violations.append("Missing fixed point on the c-cycle of z")

    trace = result.case.recursion_trace
    if not trace or trace[0] != tuple(sorted(result.orders)):
        violations.append(f"Recursion trace {trace} does not start at the orders")
    elif any(later[2] >= earlier[2] for earlier, later in zip(trace, trace[1:])):
        violations.append(f"Recursion trace {trace} is not strictly decreasing in c")
    return report


def solve(a: int, b: int, c: int) -> SolveResult:
    """
    Finds x, y, z of orders a, b, c with x y z = 1 in degree at most c + 2.

    Args:
        a (int): The order of x.
        b (int): The order of y.
        c (int): The order of z.

    Raises:
        OutOfRangeError: Unless 2 <= a <= b <= c.
        VerificationError: If the constructed triple fails its structural checks.

    Returns:
        SolveResult: The verified triple.
    """
    tag = classify(a, b, c)
    if tag.variant in EVEN_TRIPLE_CASES:
        result = solve_even_triple(a, b, c)
    elif tag.variant == CaseVariant.ODD_WITH_EVEN:
        result = solve_odd_with_even(a, b, c)
    else:
        result = solve_c_even(a, b, c)
    report = verify_structure(result)
    if not report:
        raise VerificationError(
            f"Triple for ({a}, {b}, {c}) failed verification: {report.violations}",
            {"orders": [a, b, c], "violations": report.violations},
        )
    logger.debug("Solved (%d, %d, %d) by %s in S_%d", a, b, c, tag.variant, result.degree)
    return result


def restore_slots(
    result: SolveResult, orders: Sequence[int]
) -> Tuple[Permutation, Permutation, Permutation]:
    """
    Rearranges a triple so that its slots carry the given orders.

    Uses the moves (x, y, z) -> (y, z, x) and (x, y, z) -> (y, x, z^x), both of which
    keep the product trivial.

    Args:
        result (SolveResult): A triple for the sorted orders.
        orders (Sequence): The orders in the wanted slot order.

    Raises:
        OutOfRangeError: If the orders are not a rearrangement of the triple's orders.

    Returns:
        tuple: (x, y, z) with the requested orders.
    """
    return arrange_triple(result.triple, result.orders, orders)


def arrange_triple(
    triple: Sequence[Permutation], current: Sequence[int], orders: Sequence[int]
) -> Tuple[Permutation, Permutation, Permutation]:
    """
    Rearranges a product one triple whose slots carry the orders ``current``.

    Args:
        triple (Sequence): (x, y, z) with x y z = 1.
        current (Sequence): The orders of x, y and z.
        orders (Sequence): The orders in the wanted slot order.

    Returns:
        tuple: (x, y, z) with the requested orders.
    """
    target = tuple(orders)
    if sorted(target) != sorted(current):
        raise OutOfRangeError(
            f"{target} is not a rearrangement of {tuple(current)}", {"orders": list(target)}
        )
    start = (tuple(triple), tuple(current))
    seen = {start[1]}
    queue = deque([start])
    while queue:
        (x, y, z), held = queue.popleft()
        if held == target:
            return x, y, z
        moves = (
            ((y, z, x), (held[1], held[2], held[0])),
            ((y, x, conjugate(z, x)), (held[1], held[0], held[2])),
        )
        for moved, arrangement in moves:
            if arrangement not in seen:
                seen.add(arrangement)
                queue.append((moved, arrangement))
    raise OutOfRangeError(f"Cannot arrange {tuple(current)} as {target}")  # pragma: no cover


def survey(n_max: int, jobs: int = None):
    """
    Confirms for every n <= n_max and 1 < a, b, c <= n - 2 that S_n has a triple of
    orders (a, b, c) with product one.

    Args:
        n_max (int): The largest degree, at least 4.
        jobs (`int`, optional): Worker processes. Defaults to the configured value.

    Returns:
        SurveyReport: The per degree counts, failures and the slowest solve.
    """
    from permprod.reports.survey_report import (  # pylint: disable=import-outside-toplevel
        SurveyReport,
    )

    return SurveyReport(n_max, jobs)
