"""
Error categories and custom exceptions for the propernet package.

This module provides the foundation for structured error handling throughout
the extraction pipeline, with rich context and recovery suggestions.
"""

from enum import Enum
from typing import Dict, List, Optional


class ErrorCategory(Enum):
    """Classification of error types for appropriate handling."""
    VALIDATION = "validation"
    PARSE = "parse"
    COMPUTATION = "computation"
    CONFIGURATION = "configuration"
    USAGE = "usage"
    IO = "io"
    UNKNOWN = "unknown"


class PropernetError(Exception):
    """Base exception class for propernet errors with rich context."""

    default_category = ErrorCategory.UNKNOWN

    def __init__(self, message: str, category: Optional[ErrorCategory] = None,
                 context: Optional[Dict] = None, user_message: Optional[str] = None,
                 recovery_suggestions: Optional[List[str]] = None):
        super().__init__(message)
        self.message = message
        self.category = category or self.default_category
        self.context = context or {}
        self.user_message = user_message or self._generate_user_message()
        self.recovery_suggestions = recovery_suggestions or self._generate_recovery_suggestions()

    @property
    def code(self) -> str:
        return type(self).__name__

    def _generate_user_message(self) -> str:
        """Generate user-friendly message based on error category."""
        messages = {
            ErrorCategory.VALIDATION: "An argument or data value is outside its allowed range.",
            ErrorCategory.PARSE: "The input log could not be read in the declared format.",
            ErrorCategory.COMPUTATION: "A statistic is undefined for this series.",
            ErrorCategory.CONFIGURATION: "There's a configuration issue that needs to be resolved.",
            ErrorCategory.USAGE: "The command line is incomplete or invalid.",
            ErrorCategory.IO: "A file could not be read or written.",
            ErrorCategory.UNKNOWN: "An unexpected issue occurred."
        }
        return messages.get(self.category, "An error occurred while processing the log.")

    def _generate_recovery_suggestions(self) -> List[str]:
        """Generate context-aware recovery suggestions."""
        suggestions = {
            ErrorCategory.VALIDATION: [
                "Check epsilon, alpha and span values",
                "Make sure the time span covers at least two windows"
            ],
            ErrorCategory.PARSE: [
                "Check the CSV header matches the chosen --format",
                "Make sure timestamps are integer epoch seconds or ISO-8601"
            ],
            ErrorCategory.COMPUTATION: [
                "Try a different epsilon",
                "Inspect the similarity series for degenerate windows"
            ],
            ErrorCategory.CONFIGURATION: [
                "Verify PROPERNET_* environment variables are set correctly"
            ],
            ErrorCategory.USAGE: [
                "Run with --help to see the accepted flags"
            ],
            ErrorCategory.IO: [
                "Check the input path exists and the output directory is writable"
            ],
            ErrorCategory.UNKNOWN: [
                "Re-run with --log-level DEBUG and inspect the diagnostics"
            ]
        }
        return suggestions.get(self.category, ["Re-run with --log-level DEBUG"])

    def to_dict(self) -> Dict:
        """Convert error to structured dictionary for logging."""
        return {
            "code": self.code,
            "category": self.category.value,
            "message": self.message,
            "user_message": self.user_message,
            "recovery_suggestions": self.recovery_suggestions,
            "context": self.context
        }


class NonContiguous(PropernetError):
    """Snapshot intervals have a gap or overlap."""
    default_category = ErrorCategory.VALIDATION


class MalformedHeader(PropernetError):
    """CSV header does not match the declared log format."""
    default_category = ErrorCategory.PARSE


class EmptyInput(PropernetError):
    """Input contains no records."""
    default_category = ErrorCategory.PARSE


class WrongKind(PropernetError):
    """Operation called on a log of the other kind."""
    default_category = ErrorCategory.VALIDATION


class InvalidEpsilon(PropernetError):
    default_category = ErrorCategory.VALIDATION


class NotCommonNode(PropernetError):
    """Node is missing from one of the two compared snapshots."""
    default_category = ErrorCategory.VALIDATION


class TooFewSnapshots(PropernetError):
    default_category = ErrorCategory.VALIDATION


class OutOfRange(PropernetError):
    """Common count exceeds the smaller set size."""
    default_category = ErrorCategory.VALIDATION


class InvalidAlpha(PropernetError):
    default_category = ErrorCategory.VALIDATION


class EmptySeries(PropernetError):
    default_category = ErrorCategory.COMPUTATION


class ZeroMean(PropernetError):
    default_category = ErrorCategory.COMPUTATION


class SpanTooShort(PropernetError):
    """Span holds fewer than two full epsilon windows."""
    default_category = ErrorCategory.VALIDATION


class ConfigurationError(PropernetError):
    default_category = ErrorCategory.CONFIGURATION


class UsageError(PropernetError):
    default_category = ErrorCategory.USAGE
