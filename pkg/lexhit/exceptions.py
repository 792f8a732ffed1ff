"""
Custom exceptions for the lexhit package.
"""

from typing import Optional, Dict, Any


class LexHitError(Exception):
    """Base exception for lexhit errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)


class LexHitUsageError(LexHitError):
    """Exception raised when an operation is called with invalid arguments."""


class LexHitParseError(LexHitError):
    """Exception raised for malformed hypergraph, instance or circuit text."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, {"line": line})


class BruteForceCapError(LexHitError):
    """Exception raised when a reference oracle refuses an oversized instance."""

    def __init__(self, size: int, cap: int, what: str = "vertices"):
        message = f"Brute force refused: {size} {what} exceeds the cap of {cap}"
        super().__init__(message, {"size": size, "cap": cap, "what": what})


class BoundViolationError(LexHitError):
    """Exception raised when an instrumented combinatorial bound is exceeded."""

    def __init__(self, bound: str, observed: int, limit: int):
        message = f"Bound '{bound}' violated: observed {observed}, limit {limit}"
        super().__init__(message, {"bound": bound, "observed": observed, "limit": limit})
