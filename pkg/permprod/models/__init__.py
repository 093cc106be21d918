# models/__init__.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the permutation value types and the exact arithmetic every other module consumes.

"""
from .permutation import (
    Permutation,
    Side,
    attach_cycle,
    compose,
    conjugate,
    cycle_type,
    embed,
    index,
    inverse,
    is_transitive,
    orbits,
    order,
    product,
    transposition_distance,
    transposition_distances,
    uniform_class_index,
)
from .cycle_types import (
    ClassSpec,
    CycleType,
    class_elements,
    order_cycle_types,
    partitions,
    uniform_class,
)
from .realization import Method, RealizationRequest, RealizationWitness, Variant
from .solve_result import CaseTag, CaseVariant, Holder, SolveResult
from .chain_result import ChainResult, SplitNode
