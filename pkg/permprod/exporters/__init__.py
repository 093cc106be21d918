# exporters/__init__.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Output envelopes and their JSON and text renderings.

Every envelope carries a verification summary computed by :func:`independent_check`
directly on image lists, without the permutation arithmetic used to build the result.
"""

from __future__ import annotations

import json
import math
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel, ConfigDict, Field
from strenum import StrEnum

from permprod.config import config


class TupleShape(StrEnum):
    """The cycle type rule a verified tuple must follow."""

    ANY = "Any"
    CHAIN = "Chain"
    TRIPLE = "Triple"


class OutputEnvelope(BaseModel):
    """A command's echo, seed, result and verification summary."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    schema_tag: str = Field(default=config.cli["schema"], alias="schema")
    """(str): The versioned schema tag."""
    command: str
    """(str): The command name."""
    arguments: Dict[str, Any] = Field(default_factory=dict)
    """(dict): The command's arguments."""
    seed: int
    """(int): The seed in effect."""
    result: Dict[str, Any]
    """(dict): The payload."""
    verification: Dict[str, Any] = Field(default_factory=dict)
    """(dict): The emit time verification summary."""
    timing: Optional[Dict[str, float]] = None
    """(`dict`, optional): Wall clock timings, only when requested."""

    @property
    def verified(self) -> bool:
        """(bool): Whether the verification summary reports success."""
        return bool(self.verification.get("ok", True))


def _cycle_lengths(images: Sequence[int]) -> List[int]:
    seen = [False] * len(images)
    lengths = []
    for start in range(len(images)):
        if seen[start]:
            continue
        length, point = 0, start
        while not seen[point]:
            seen[point] = True
            point = images[point] - 1
            length += 1
        lengths.append(length)
    return sorted(lengths, reverse=True)


def _shape_violations(
    cycle_types: List[List[int]], orders: Sequence[int], shape: TupleShape
) -> List[str]:
    violations = []
    extra = []
    for slot, (lengths, order) in enumerate(zip(cycle_types, orders)):
        nontrivial = [length for length in lengths if length > 1]
        stray = sorted({length for length in nontrivial if length not in (order, 2)})
        if stray:
            violations.append(f"element {slot} has cycles of lengths {stray}")
        if shape == TupleShape.TRIPLE and order != 2 and 2 in nontrivial:
            if nontrivial.count(2) > 1:
                violations.append(f"element {slot} has more than one extra transposition")
            extra.append(slot)
    if shape != TupleShape.TRIPLE:
        return violations

    if len(extra) > 1:
        violations.append(f"elements {extra} all carry an extra transposition")
    top = max(orders)
    if not any(
        order == top and [length for length in lengths if length > 1] in ([top], [top, 2])
        for lengths, order in zip(cycle_types, orders)
    ):
        violations.append(f"no element of order {top} is of type ({top}) or ({top}, 2)")
    return violations


def independent_check(
    image_lists: Sequence[Sequence[int]],
    orders: Optional[Sequence[int]] = None,
    shape: TupleShape = TupleShape.ANY,
) -> Dict[str, Any]:
    """
    Re-verifies a product one tuple from its raw image lists.

    Args:
        image_lists (Sequence): For each element, the images of 1..n in order.
        orders (`Sequence`, optional): The expected element orders.
        shape (`TupleShape`, optional): The cycle type rule to check against the
            expected orders. A chain may only have cycles of length 1, 2 and its order.
            A triple additionally has at most one extra transposition, in one element,
            and an element of the largest order c of type (c) or (c, 2).

    Returns:
        dict: Whether each element is a bijection, the product is trivial and the orders
        match, with the observed cycle types and orders. With a shape, also whether the
        cycle types follow it.
    """
    degrees = {len(images) for images in image_lists}
    bijective = len(degrees) == 1 and all(
        sorted(images) == list(range(1, len(images) + 1)) for images in image_lists
    )
    summary: Dict[str, Any] = {"bijective": bijective}
    if not bijective:
        summary["ok"] = False
        return summary

    degree = degrees.pop()
    identity = True
    for point in range(1, degree + 1):
        image = point
        for images in image_lists:
            image = images[image - 1]
        identity = identity and image == point
    cycle_types = [_cycle_lengths(images) for images in image_lists]
    observed = [math.lcm(*lengths) for lengths in cycle_types]

    summary.update(
        {
            "degree": degree,
            "product_identity": identity,
            "orders": observed,
            "cycle_types": cycle_types,
        }
    )
    orders_match = orders is None or list(orders) == observed
    if orders is not None:
        summary["orders_match"] = orders_match
    shape_ok = True
    if orders is not None and shape != TupleShape.ANY:
        violations = _shape_violations(cycle_types, orders, shape)
        shape_ok = not violations
        summary["shape_ok"] = shape_ok
        summary["shape_violations"] = violations
    summary["ok"] = identity and orders_match and shape_ok
    return summary


class BaseExporter(ABC):
    """Base class for all exporters."""

    def __init__(self, envelope: OutputEnvelope):
        """
        Initialize the exporter.

        Args:
            envelope: The envelope to export.
        """
        self.envelope = envelope

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert the envelope to a dictionary.

        Returns:
            Dictionary with the top level ``schema`` key.
        """
        return self.envelope.model_dump(by_alias=True, exclude_none=True)

    @abstractmethod
    def render(self) -> str:
        """
        Render the envelope as text.

        Returns:
            The rendering.
        """

    def export(self, filepath: Union[str, Path]) -> Path:
        """
        Export the envelope to a file.

        Args:
            filepath: The path to save the exported file.

        Returns:
            The path to the exported file.
        """
        filepath = Path(filepath)
        with open(filepath, "w", encoding="utf-8") as f:
            f.write(self.render())
            f.write("\n")
        return filepath


class JSONExporter(BaseExporter):
    """Export envelopes to JSON, with sorted keys so equal envelopes render identically."""

    def render(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str)


class TextExporter(BaseExporter):
    """Export envelopes as indented ``key: value`` lines."""

    indent = " " * config.reports["indent_length"]

    def _lines(self, value: Any, depth: int) -> List[str]:
        prefix = self.indent * depth
        if isinstance(value, dict):
            lines = []
            for key, item in value.items():
                if isinstance(item, (dict, list)) and item and not _flat(item):
                    lines.append(f"{prefix}{key}:")
                    lines.extend(self._lines(item, depth + 1))
                else:
                    lines.append(f"{prefix}{key}: {_inline(item)}")
            return lines
        if isinstance(value, list):
            lines = []
            for item in value:
                if isinstance(item, (dict, list)) and not _flat(item):
                    lines.extend(self._lines(item, depth))
                else:
                    lines.append(f"{prefix}{_inline(item)}")
            return lines
        return [f"{prefix}{_inline(value)}"]

    def render(self) -> str:
        data = self.to_dict()
        data.pop("result", None)
        data.pop("schema", None)
        result = self.envelope.result
        lines = [f"{data.pop('command')} (seed {data.pop('seed')})"]
        lines.extend(self._lines(result, 1))
        lines.extend(self._lines(data, 0))
        return "\n".join(lines)


def _flat(value: Any) -> bool:
    items = value.values() if isinstance(value, dict) else value
    return all(not isinstance(i, (dict, list)) for i in items)


def _inline(value: Any) -> str:
    if isinstance(value, list):
        return ", ".join(_inline(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}={_inline(v)}" for k, v in value.items())
    return str(value)


def export_envelope(
    envelope: OutputEnvelope, filepath: Union[str, Path], format: str = "json"
) -> Path:
    """
    Export an envelope to the specified format.

    Args:
        envelope: The envelope to export.
        filepath: The path to save the exported file.
        format: The export format (json, text).

    Returns:
        The path to the exported file.

    Raises:
        ValueError: If the format is not supported.
    """
    exporters = {"json": JSONExporter, "text": TextExporter}
    if format not in exporters:
        raise ValueError(f"Unsupported format: {format}. Use one of {list(exporters)}")
    return exporters[format](envelope).export(filepath)
