# utils/__init__.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Small arithmetic helpers shared by the solvers.

"""
from math import isqrt
from typing import Sequence

_MIX = 0x9E3779B97F4A7C15
_MASK = (1 << 64) - 1


def is_prime(n: int) -> bool:
    """
    Trial division primality test.

    Args:
        n (int): The number tested.

    Returns:
        bool: Whether n is prime.
    """
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, isqrt(n) + 1, 2))


def derive_seed(values: Sequence[int], base: int = 0) -> int:
    """
    Mixes a sequence of integers into a 64 bit seed.

    Args:
        values (Sequence): The integers, e.g. an order triple.
        base (int): The base seed.

    Returns:
        int: A seed in [0, 2**64), a pure function of the arguments.
    """
    seed = base & _MASK
    for value in values:
        seed = ((seed ^ value) * _MIX + 1) & _MASK
        seed ^= seed >> 29
    return seed
