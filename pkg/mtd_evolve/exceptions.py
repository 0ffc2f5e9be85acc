"""
Custom exceptions for mtd-evolve.

Every error raised on purpose by the package derives from
``MtdEvolveException`` and carries a human readable message plus a
``details`` mapping with the machine readable context (field names,
paths, offending values).
"""

from typing import Any, Dict, Optional


class MtdEvolveException(Exception):
    """Base exception for all mtd-evolve exceptions."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class CodecError(MtdEvolveException):
    """Raised when a chromosome or machine cannot be converted."""


class DomainError(MtdEvolveException):
    """Raised when a numeric argument lies outside its mathematical domain."""


class ConfigurationError(MtdEvolveException):
    """Raised when there's a configuration error."""

    @property
    def field(self) -> Optional[str]:
        value = self.details.get("field")
        return str(value) if value is not None else None


class UsageError(MtdEvolveException):
    """Raised when an operation is called with arguments it cannot serve."""


class OutputError(MtdEvolveException):
    """Raised when results cannot be persisted."""


__all__ = [
    "MtdEvolveException",
    "CodecError",
    "DomainError",
    "ConfigurationError",
    "UsageError",
    "OutputError",
]
