"""Shared exception types.

DomainError covers mathematically invalid inputs (CLI exit code 3);
ResourceLimitError covers size/bound cutoffs (CLI exit code 4).
"""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class ResourceLimitError(RuntimeError):
    """Computation refused because it exceeds a configured limit."""
