"""Exception types shared across the package."""

from __future__ import annotations


class UsageError(ValueError):
    """An operation was applied outside its documented domain."""


class ParseError(UsageError):
    """Input text could not be parsed; carries a 1-based position."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


class ExponentOverflowError(ArithmeticError):
    """An exponent left the representable range; exponents never wrap silently."""


class BudgetError(RuntimeError):
    """A configured resource budget was exceeded.

    ``partial`` holds whatever was computed before the budget tripped, for
    operations that support partial results.
    """

    def __init__(self, message: str, partial=None) -> None:
        super().__init__(message)
        self.partial = partial
