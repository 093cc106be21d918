# utils/batch.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Batch evaluation of independent work items, optionally over worker processes.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Dict, Generic, List, Sequence, TypeVar

from permprod.exceptions import PermProdError

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass
class BatchResult(Generic[T]):
    """Result of a batch operation."""

    successful: List[T]
    """Results of the items that completed, in input order."""

    failed: List[Dict[str, Any]]
    """Failed items with error details."""

    total: int
    """Total number of items processed."""

    @property
    def success_count(self) -> int:
        """Number of successful operations."""
        return len(self.successful)

    @property
    def failure_count(self) -> int:
        """Number of failed operations."""
        return len(self.failed)

    @property
    def success_rate(self) -> float:
        """Success rate as a percentage."""
        if self.total == 0:
            return 0.0
        return (self.success_count / self.total) * 100


def _run_chunk(function: Callable, chunk: Sequence) -> list:
    outcomes = []
    for item in chunk:
        try:
            outcomes.append((True, function(item)))
        except PermProdError as e:
            outcomes.append((False, {"item": item, "error": str(e), "code": e.code}))
    return outcomes


class BatchProcessor:
    """
    Applies a function to many independent items.

    With more than one job the items are partitioned into contiguous chunks evaluated
    by a process pool; results are reassembled in input order, so the outcome does not
    depend on scheduling.
    """

    def __init__(self, jobs: int = 1, chunk_size: int = 256):
        """
        Initialize the batch processor.

        Args:
            jobs: Number of worker processes, 1 evaluates in process.
            chunk_size: Number of items handed to a worker at a time.
        """
        self.jobs = max(1, jobs)
        self.chunk_size = max(1, chunk_size)

    def run(self, function: Callable[[Any], T], items: Sequence) -> BatchResult[T]:
        """
        Evaluate the function on every item.

        Args:
            function: A picklable module level function.
            items: The inputs.

        Returns:
            BatchResult with the results and the items that raised a PermProdError.
        """
        items = list(items)
        chunks = [
            items[i : i + self.chunk_size] for i in range(0, len(items), self.chunk_size)
        ]
        if self.jobs == 1 or len(chunks) < 2:
            outcomes = [_run_chunk(function, chunk) for chunk in chunks]
        else:
            logger.info("Evaluating %d items over %d processes", len(items), self.jobs)
            with ProcessPoolExecutor(max_workers=self.jobs) as pool:
                outcomes = list(pool.map(_run_chunk, [function] * len(chunks), chunks))

        successful, failed = [], []
        for chunk in outcomes:
            for ok, value in chunk:
                (successful if ok else failed).append(value)
        return BatchResult(successful=successful, failed=failed, total=len(items))
