# solvers/__init__.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Provides the constructive solvers and the brute force oracle that checks them.

"""
from .class_realizer import (
    probe_two_cycle_product,
    realize,
    realize_full_cycle,
    realize_near_cycle,
    relabel_fixed_point,
    unicellular_pair,
)
from .oracle import (
    SearchBudget,
    class_pair_realizable,
    class_triple_realizable,
    exhaustive_triple_search,
    full_double_search,
    min_degree,
    minimal_order_degree,
)
from .triple_solver import (
    VerificationReport,
    arrange_triple,
    classify,
    glue_pair,
    restore_slots,
    reversed_triple,
    solve,
    solve_c_even,
    solve_even_triple,
    solve_odd_with_even,
    survey,
    verify_structure,
)
from .chain_builder import (
    align_to_inverse,
    bertrand_prime,
    degree_six_table,
    extend,
    replay,
)
