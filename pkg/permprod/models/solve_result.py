# models/solve_result.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents a product-one triple (x, y, z) with prescribed orders and how it was built.

"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

from strenum import StrEnum

from permprod.models.permutation import Permutation


class CaseVariant(StrEnum):
    """The construction that produced a triple."""

    EVEN_TRIPLE = "EvenTriple_Sc"
    EVEN_TRIPLE_DROP_CYCLE = "EvenTriple_Sc_DropCycle"
    EVEN_TRIPLE_ADD_TRANSPOSITION = "EvenTriple_Sc_AddTransposition"
    ODD_WITH_EVEN = "OddWithEven_Sc1"
    C_EVEN_CASE1 = "CEven_Case1"
    C_EVEN_CASE1_EXCEPTION_HALF = "CEven_Case1_ExceptionHalf"
    C_EVEN_CASE1_EXCEPTION_358 = "CEven_Case1_Exception358"
    C_EVEN_ALL_EQUAL = "CEven_AllEqual"
    C_EVEN_CASE2 = "CEven_Case2"
    C_EVEN_CASE3 = "CEven_Case3"

    @property
    def is_c_even(self) -> bool:
        """(bool): Whether the construction carries a z of type (c.2)."""
        return self.value.startswith("CEven")


class Holder(StrEnum):
    """A slot of the triple."""

    NONE = "None"
    X = "X"
    Y = "Y"
    Z = "Z"

    def swapped(self) -> Holder:
        """(Holder): X and Y exchanged, other slots unchanged."""
        return {Holder.X: Holder.Y, Holder.Y: Holder.X}.get(self, self)


@dataclass(frozen=True)
class CaseTag:
    """The construction case and the order triples its recursion visited."""

    variant: CaseVariant
    """(CaseVariant): The top level case."""
    recursion_trace: Tuple[Tuple[int, int, int], ...]
    """(tuple): The visited (a, b, c) triples, the input first, c strictly decreasing."""

    def to_dict(self) -> dict:
        """Convert the tag to a dictionary."""
        return {
            "variant": str(self.variant),
            "recursion_trace": [list(t) for t in self.recursion_trace],
        }


@dataclass(frozen=True)
class SolveResult:
    """A triple with x y z = 1 and orders (a, b, c)."""

    x: Permutation
    y: Permutation
    z: Permutation
    orders: Tuple[int, int, int]
    case: CaseTag
    exceptional_transposition_holder: Holder = Holder.NONE
    """(Holder): The slot carrying the extra transposition, if any."""
    fixed_point_on_big_cycle: Optional[Tuple[Holder, int]] = field(default=None)
    """(`tuple`, optional): A slot among X, Y and a point of the c-cycle of z it fixes."""

    @property
    def degree(self) -> int:
        """(int): The common degree."""
        return self.x.degree

    @property
    def triple(self) -> tuple:
        """(tuple): (x, y, z)."""
        return (self.x, self.y, self.z)

    def to_dict(self) -> dict:
        """Convert the result to a dictionary."""
        fixed = self.fixed_point_on_big_cycle
        return {
            "x": str(self.x),
            "y": str(self.y),
            "z": str(self.z),
            "degree": self.degree,
            "orders": list(self.orders),
            "case": self.case.to_dict(),
            "exceptional_transposition_holder": str(self.exceptional_transposition_holder),
            "fixed_point_on_big_cycle": (
                None if fixed is None else {"holder": str(fixed[0]), "point": fixed[1]}
            ),
            "images": {
                "x": list(self.x.images),
                "y": list(self.y.images),
                "z": list(self.z.images),
            },
        }
