"""
Domain errors module.
"""

from typing import Any, Dict, Optional


class InputError(ValueError):
    """Raised when input data is malformed or inconsistent."""
    pass


class NotFoundError(InputError):
    """Raised when a named preset is not found."""
    pass


class ConvergenceError(Exception):
    """Raised when an iterative stage does not converge."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"{stage}: {message}")
        self.stage = stage


class DegenerateMinimumError(Exception):
    """Raised when a critical point is not a transversally nondegenerate minimum."""
    pass


class IdentityViolationError(Exception):
    """Raised when a structural identity fails; carries the diagnostic."""

    def __init__(self, message: str, diagnostic: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostic = diagnostic or {}
