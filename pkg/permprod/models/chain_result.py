# models/chain_result.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents a product-one tuple of arbitrary length and the splits that built it.

"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from permprod.models.permutation import Permutation


@dataclass(frozen=True)
class SplitNode:
    """One prime split: both halves were built with a leading element of order ``prime``."""

    prime: int
    """(int): The order of the dropped heads."""
    left_indices: Tuple[int, ...]
    """(tuple): Positions, within the node's orders, built by the left half."""
    right_indices: Tuple[int, ...]
    """(tuple): Positions built by the right half."""
    left: Optional[SplitNode] = None
    """(`SplitNode`, optional): The split of the left half, None for a triple."""
    right: Optional[SplitNode] = None
    """(`SplitNode`, optional): The split of the right half, None for a triple."""

    def to_dict(self) -> dict:
        """Convert the tree to a dictionary."""
        return {
            "prime": self.prime,
            "left_indices": list(self.left_indices),
            "right_indices": list(self.right_indices),
            "left": self.left.to_dict() if self.left else None,
            "right": self.right.to_dict() if self.right else None,
        }


@dataclass(frozen=True)
class ChainResult:
    """Elements x_1, ..., x_r of a common degree with x_1 ... x_r = 1."""

    elements: Tuple[Permutation, ...]
    orders: Tuple[int, ...]
    split_tree: Optional[SplitNode] = None
    """(`SplitNode`, optional): The recorded splits, None when no split was needed."""

    @property
    def degree(self) -> int:
        """(int): The common degree."""
        return self.elements[0].degree

    def to_dict(self) -> dict:
        """Convert the chain to a dictionary."""
        return {
            "elements": [str(e) for e in self.elements],
            "orders": list(self.orders),
            "degree": self.degree,
            "split_tree": self.split_tree.to_dict() if self.split_tree else None,
            "images": [list(e.images) for e in self.elements],
        }
