# exceptions/__init__.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Custom exceptions for permprod with error codes.

Each exception has:
- A unique error code for programmatic handling
- A descriptive message
- Optional context data

Error Code Format:
- PP1xxx: Permutation arithmetic errors
- PP2xxx: Realizer errors
- PP3xxx: Solver errors
- PP4xxx: Chain errors
- PP5xxx: Covering errors
- PP6xxx: Oracle errors
- PP9xxx: System errors
"""

from __future__ import annotations

from typing import Any, Dict, Optional


class PermProdError(Exception):
    """
    Base exception for all permprod errors.

    Attributes:
        code: Unique error code (e.g., 'PP1001').
        message: Human-readable error message.
        context: Additional context data.
    """

    code: str = "PP0000"
    default_message: str = "A permutation product error occurred"

    def __init__(
        self,
        message: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        self.message = message or self.default_message
        self.context = context or {}
        super().__init__(self.message)

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"

    def to_dict(self) -> Dict[str, Any]:
        """Convert exception to dictionary for machine-readable output."""
        return {
            "error_code": self.code,
            "message": self.message,
            "context": self.context,
        }


# Permutation Errors (PP1xxx)

class DegreeMismatchError(PermProdError):
    """Raised when permutations of different degrees are combined."""
    code = "PP1001"
    default_message = "Permutations must have the same degree"


class OutOfRangeError(PermProdError):
    """Raised when an integer argument lies outside its admissible range."""
    code = "PP1002"
    default_message = "Argument is out of range"


class SupportOverlapError(PermProdError):
    """Raised when a glued cycle shares more than one point with a permutation."""
    code = "PP1003"
    default_message = "Cycle support shares more than one point with the permutation"


class InvalidPermutationError(PermProdError):
    """Raised when an image list is not a bijection on 1..n."""
    code = "PP1004"
    default_message = "Images do not form a bijection on 1..n"


class NotationError(PermProdError):
    """Raised when cycle notation cannot be parsed."""
    code = "PP1005"
    default_message = "Malformed cycle notation"


# Realizer Errors (PP2xxx)

class ParityViolationError(PermProdError):
    """Raised when the index sum of two classes fails the realizability condition."""
    code = "PP2001"
    default_message = "Index sum of the classes does not satisfy the realizability condition"


class FixedPointFreeInvolutionsError(PermProdError):
    """Raised when both classes are fixed point free involutions (near cycle variant)."""
    code = "PP2002"
    default_message = "Both classes are fixed point free involutions"


class SearchExhaustedError(PermProdError):
    """Raised when every search strategy failed to produce a witness."""
    code = "PP2003"
    default_message = "All search strategies were exhausted without a witness"


# Solver Errors (PP3xxx)

class VerificationError(PermProdError):
    """Raised when a constructed result fails its own re-verification."""
    code = "PP3001"
    default_message = "Constructed result failed verification"


# Chain Errors (PP4xxx)

class NoSuchPrimeError(PermProdError):
    """Raised when no prime p with n/2 < p <= n-2 exists."""
    code = "PP4001"
    default_message = "No prime p with n/2 < p <= n-2 exists"


class TypeMismatchError(PermProdError):
    """Raised when two permutations expected to be conjugate have different cycle types."""
    code = "PP4002"
    default_message = "Cycle types differ"


class InvalidArityError(PermProdError):
    """Raised when a tuple is too short."""
    code = "PP4003"
    default_message = "At least three orders are required"


# Covering Errors (PP5xxx)

class ProductNotIdentityError(PermProdError):
    """Raised when a monodromy tuple does not multiply to the identity."""
    code = "PP5001"
    default_message = "The product of the tuple is not the identity"


class NonIntegralGenusError(PermProdError):
    """Raised when an orbit genus is negative or not an integer."""
    code = "PP5002"
    default_message = "Genus is not a non-negative integer"


# Oracle Errors (PP6xxx)

class BudgetExceededError(PermProdError):
    """Raised when a brute-force search runs out of its budget (result inconclusive)."""
    code = "PP6001"
    default_message = "Search budget exceeded; the result is inconclusive"


# System Errors (PP9xxx)

class ConfigurationError(PermProdError):
    """Raised when configuration is invalid."""
    code = "PP9002"
    default_message = "Invalid configuration"


ERROR_CODES = {
    "PP1001": DegreeMismatchError,
    "PP1002": OutOfRangeError,
    "PP1003": SupportOverlapError,
    "PP1004": InvalidPermutationError,
    "PP1005": NotationError,
    "PP2001": ParityViolationError,
    "PP2002": FixedPointFreeInvolutionsError,
    "PP2003": SearchExhaustedError,
    "PP3001": VerificationError,
    "PP4001": NoSuchPrimeError,
    "PP4002": TypeMismatchError,
    "PP4003": InvalidArityError,
    "PP5001": ProductNotIdentityError,
    "PP5002": NonIntegralGenusError,
    "PP6001": BudgetExceededError,
    "PP9002": ConfigurationError,
}


def get_error_by_code(code: str) -> type:
    """
    Get exception class by error code.

    Args:
        code: The error code (e.g., 'PP1001').

    Returns:
        The exception class.

    Raises:
        KeyError: If code is not found.
    """
    return ERROR_CODES[code]
