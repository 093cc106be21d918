# reports/survey_report.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Represents a sweep over the order triples realizable in each symmetric group.

A cell (n; a, b, c) with 1 < a, b, c <= n - 2 passes when the solver's triple for the
orders, taken in that slot order, has degree at most n.

"""
from __future__ import annotations

import logging
import time
from functools import lru_cache
from itertools import product as cartesian
from typing import Tuple

from permprod.config import config as configuration
from permprod.exceptions import OutOfRangeError, VerificationError
from permprod.models.permutation import compose
from permprod.solvers.triple_solver import arrange_triple, solve
from permprod.utils.batch import BatchProcessor

logger = logging.getLogger(__name__)

MIN_DEGREE = 4


@lru_cache(maxsize=None)
def _solve_sorted(a: int, b: int, c: int, seed: int):  # pylint: disable=unused-argument
    # seed keys the cache, solve reads it from the configuration
    return solve(a, b, c)


def check_triple(orders: Tuple[int, int, int]) -> dict:
    """
    Solves one unsorted order triple and re-checks the arranged result.

    Args:
        orders (tuple): The orders of x, y and z.

    Raises:
        VerificationError: If the arranged triple has the wrong orders or product.

    Returns:
        dict: The orders, the degree and the seconds spent.
    """
    started = time.perf_counter()
    result = _solve_sorted(*sorted(orders), configuration.solver["seed"])
    x, y, z = arrange_triple(result.triple, result.orders, orders)
    if not compose(compose(x, y), z).is_identity():
        raise VerificationError(f"The arranged triple for {orders} has a non trivial product")
    if (x.order(), y.order(), z.order()) != tuple(orders):
        raise VerificationError(f"The arranged triple for {orders} has the wrong orders")
    return {
        "orders": tuple(orders),
        "degree": result.degree,
        "seconds": time.perf_counter() - started,
    }


class SurveyReport:
    """Per degree cell counts, failures and the slowest solve of a survey."""

    config = "survey_report"
    """(str): The configuration section for the report."""
    indent: str = " " * configuration.reports["indent_length"]
    """(str): The indent of report lines."""

    def __init__(self, n_max: int, jobs: int = None) -> None:
        if n_max < MIN_DEGREE:
            raise OutOfRangeError(
                f"The survey needs n_max >= {MIN_DEGREE}, got {n_max}", {"n_max": n_max}
            )
        self.title = configuration.reports[self.config]["title"]
        self.n_max = n_max
        self.jobs = jobs or configuration.survey["jobs"]

        triples = list(cartesian(range(2, n_max - 1), repeat=3))
        logger.info("Surveying %d order triples up to S_%d", len(triples), n_max)
        batch = BatchProcessor(jobs=self.jobs).run(check_triple, triples)
        logger.info(
            "Solved %d of %d triples (%.1f%%)", batch.success_count, batch.total, batch.success_rate
        )
        degrees = {r["orders"]: r["degree"] for r in batch.successful}
        errors = {tuple(f["item"]): f["error"] for f in batch.failed}

        self.max_solve_time = max((r["seconds"] for r in batch.successful), default=0.0)
        """(float): The longest single solve, in seconds."""
        self.counts = {}
        """(dict): For each degree n, the number of cells and of passing cells."""
        self.failures = []
        """(list): The failing cells with the reason."""

        for n in range(MIN_DEGREE, n_max + 1):
            passed = 0
            for cell in cartesian(range(2, n - 1), repeat=3):
                degree = degrees.get(cell)
                if degree is not None and degree <= n:
                    passed += 1
                    continue
                reason = errors.get(cell) or f"degree {degree} exceeds {n}"
                self.failures.append({"n": n, "orders": list(cell), "reason": reason})
            self.counts[n] = {"cells": (n - 3) ** 3, "passed": passed}
            logger.info("S_%d: %d of %d cells pass", n, passed, (n - 3) ** 3)

    @property
    def total_cells(self) -> int:
        """(int): The number of cells over all degrees."""
        return sum(c["cells"] for c in self.counts.values())

    @property
    def ok(self) -> bool:
        """(bool): Whether every cell passed."""
        return not self.failures

    def to_dict(self, timing: bool = False) -> dict:
        """
        Convert the report to a dictionary.

        Args:
            timing (bool): Whether to include the slowest solve time.

        Returns:
            dict: The counts and failures.
        """
        data = {
            "n_max": self.n_max,
            "total_cells": self.total_cells,
            "counts": {str(n): c for n, c in self.counts.items()},
            "failures": self.failures,
            "ok": self.ok,
        }
        if timing:
            data["max_solve_time"] = self.max_solve_time
        return data

    def __str__(self) -> str:
        width = max(len(self.title), 45)
        lines = [self.title.center(width), f"n <= {self.n_max}".center(width), ""]
        for n, count in self.counts.items():
            label = f"{self.indent}S_{n}"
            result = f"{count['passed']}/{count['cells']}"
            lines.append(f"{label}{result:>{width - len(label)}}")
        lines.append("")
        lines.append(f"Cells {self.total_cells}, failures {len(self.failures)}")
        for failure in self.failures:
            lines.append(f"{self.indent}S_{failure['n']} {failure['orders']}: {failure['reason']}")
        return "\n".join(lines)
