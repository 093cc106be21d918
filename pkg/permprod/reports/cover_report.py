# reports/cover_report.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents the branch data of a covering of the sphere with prescribed ramification orders.

"""
from __future__ import annotations

from typing import Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from permprod.config import config as configuration
from permprod.exceptions import VerificationError
from permprod.models.chain_result import ChainResult
from permprod.reports.hurwitz import genus, ramification
from permprod.solvers.chain_builder import extend


class BranchSpec(BaseModel):
    """Ramification orders over distinct branch points."""

    model_config = ConfigDict(frozen=True)

    orders: Tuple[int, ...]
    """(tuple): The order a_i of the monodromy around each branch point."""
    branch_points: Tuple[str, ...]
    """(tuple): Opaque labels for the branch points."""

    @model_validator(mode="after")
    def _consistent(self) -> BranchSpec:
        if len(self.orders) < 3:
            raise ValueError(f"At least three branch points are needed, got {len(self.orders)}")
        if any(a < 2 for a in self.orders):
            raise ValueError(f"Orders must be at least 2: {list(self.orders)}")
        if len(self.branch_points) != len(self.orders):
            raise ValueError("Every order needs exactly one branch point")
        if len(set(self.branch_points)) != len(self.branch_points):
            raise ValueError(f"Branch point labels repeat: {list(self.branch_points)}")
        return self

    @classmethod
    def of(cls, orders: Sequence[int], labels: Optional[Sequence[str]] = None) -> BranchSpec:
        """
        Builds a spec, labelling the branch points p1, p2, ... unless labels are given.

        Args:
            orders (Sequence): The ramification orders.
            labels (`Sequence`, optional): The branch point labels.

        Returns:
            BranchSpec: The spec.
        """
        labels = labels or [f"p{i}" for i in range(1, len(orders) + 1)]
        return cls(orders=tuple(orders), branch_points=tuple(labels))


# pylint: disable=too-few-public-methods
class CoverReport:
    """
    The monodromy of a covering with the given ramification orders, its ramification over
    each branch point and the genus of each component.
    """

    config = "cover_report"
    """(str): The configuration section for the report."""
    indent: str = " " * configuration.reports["indent_length"]
    """(str): The indent of report lines."""

    def __init__(self, spec: BranchSpec) -> None:
        self.spec = spec
        self.title = configuration.reports[self.config]["title"]
        self.chain: ChainResult = extend(spec.orders)
        """(ChainResult): The monodromy tuple, element i sits over branch point i."""
        self.degree = self.chain.degree
        """(int): The degree of the covering."""
        self.per_point_ramification = dict(
            zip(spec.branch_points, ramification(self.chain.elements))
        )
        """(dict): The ramification indices over each branch point, descending."""
        self.genus_per_orbit = genus(self.chain.elements)
        """(list): (orbit, genus) for every component."""

        for label, order in zip(spec.branch_points, spec.orders):
            unexpected = set(self.per_point_ramification[label]) - {1, 2, order}
            if unexpected:
                raise VerificationError(
                    f"Ramification over {label} has indices {sorted(unexpected)}",
                    {"point": label, "order": order},
                )

    @staticmethod
    def _multiset(lengths: tuple) -> str:
        labels = []
        for value in sorted(set(lengths), reverse=True):
            count = lengths.count(value)
            labels.append(str(value) if count == 1 else f"{value}^{count}")
        return "{" + ",".join(labels) + "}"

    def to_dict(self) -> dict:
        """Convert the report to a dictionary."""
        return {
            "degree": self.degree,
            "chain": self.chain.to_dict(),
            "per_point_ramification": {
                label: list(lengths) for label, lengths in self.per_point_ramification.items()
            },
            "genus_per_orbit": [
                {"orbit": sorted(orbit), "genus": value} for orbit, value in self.genus_per_orbit
            ],
        }

    def __str__(self) -> str:
        width = max(len(self.title), 45)
        lines = [self.title.center(width), f"Degree {self.degree}".center(width), ""]
        lines.append("Ramification")
        for (label, lengths), order, element in zip(
            self.per_point_ramification.items(), self.spec.orders, self.chain.elements
        ):
            lines.append(f"{self.indent}{label} (order {order}): {self._multiset(lengths)}")
            lines.append(f"{self.indent * 2}{element}")
        lines.append("Components")
        for orbit, value in self.genus_per_orbit:
            lines.append(f"{self.indent}{len(orbit)} points, genus {value}")
        return "\n".join(lines)


def branch_data_report(spec: BranchSpec) -> CoverReport:
    """
    Builds the branch data of a covering of degree at most max(orders) + 2.

    Args:
        spec (BranchSpec): The ramification orders.

    Returns:
        CoverReport: The report.
    """
    return CoverReport(spec)
