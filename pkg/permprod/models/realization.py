# models/realization.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents requests for, and witnesses of, two-class products with a long-cycle product.

"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from strenum import StrEnum

from permprod.models.cycle_types import ClassSpec
from permprod.models.permutation import Permutation


class Variant(StrEnum):
    """The shape of the requested product."""

    FULL_CYCLE = "FullCycle"
    NEAR_CYCLE = "NearCycle"
    SPLIT_CYCLE = "SplitCycle"


class Method(StrEnum):
    """The strategy that produced a witness."""

    CONSTRUCTIVE = "Constructive"
    RANDOMIZED = "Randomized"
    EXHAUSTIVE = "Exhaustive"


class RealizationRequest(BaseModel):
    """Two classes of a common degree and the search parameters for realizing them."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    c1: ClassSpec
    """(ClassSpec): The class of alpha."""
    c2: ClassSpec
    """(ClassSpec): The class of beta."""
    variant: Variant = Variant.FULL_CYCLE
    """(Variant): Whether the product is an n-cycle or a transitive (n-1)-cycle."""
    seed: int = Field(default=0, ge=0, lt=2**64)
    """(int): Seed for the randomized strategy."""
    retry_cap: Optional[int] = Field(default=None, gt=0)
    """(`int`, optional): Randomized draws before falling back. Defaults to the configured cap."""
    strategies: Optional[Tuple[str, ...]] = None
    """(`tuple`, optional): Strategy order override. Defaults to the configured order."""

    @model_validator(mode="after")
    def _degrees_agree(self) -> RealizationRequest:
        if self.c1.degree != self.c2.degree:
            raise ValueError(f"Class degrees differ: {self.c1.degree} != {self.c2.degree}")
        return self

    @property
    def degree(self) -> int:
        """(int): The common degree."""
        return self.c1.degree


@dataclass(frozen=True)
class RealizationWitness:
    """A verified pair (alpha, beta) with the requested product."""

    alpha: Permutation
    """(Permutation): An element of the first class."""
    beta: Permutation
    """(Permutation): An element of the second class."""
    product: Permutation
    """(Permutation): compose(alpha, beta)."""
    method: Method
    """(Method): The strategy that found the pair."""
    variant: Variant = Variant.FULL_CYCLE
    """(Variant): The product shape."""

    @property
    def fixed_point(self) -> Optional[int]:
        """(`int`, optional): The fixed point of a near cycle product."""
        if self.variant != Variant.NEAR_CYCLE:
            return None
        fixed = self.product.fixed_points()
        return fixed[0] if len(fixed) == 1 else None

    def to_dict(self) -> dict:
        """Convert the witness to a dictionary."""
        return {
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "product": str(self.product),
            "method": str(self.method),
            "variant": str(self.variant),
        }
