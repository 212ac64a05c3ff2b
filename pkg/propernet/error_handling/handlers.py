"""
Centralized error handling with structured logging and exit-code mapping.

This module provides the ErrorHandler class for classifying, logging, and
tracking errors raised while running the command line front end.
"""

import logging
import traceback
from typing import Dict, Optional

from .exceptions import ErrorCategory, PropernetError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class ErrorHandler:
    """Centralized error handling with structured logging and exit codes."""

    def __init__(self):
        self.logger = logging.getLogger("propernet.errors")
        self.error_counts = {}  # category_type -> count

    def classify_error(self, error: Exception) -> ErrorCategory:
        """Classify error based on type."""
        if isinstance(error, PropernetError):
            return error.category
        if isinstance(error, OSError):
            return ErrorCategory.IO
        if isinstance(error, UnicodeDecodeError):
            return ErrorCategory.PARSE
        if isinstance(error, (ValueError, KeyError, TypeError)):
            return ErrorCategory.VALIDATION
        return ErrorCategory.UNKNOWN

    def handle_error(self, error: Exception, context: Optional[Dict] = None,
                     operation: str = "unknown") -> PropernetError:
        """Handle error with classification, logging, and structured response."""
        category = self.classify_error(error)

        error_key = f"{category.value}_{type(error).__name__}"
        self.error_counts[error_key] = self.error_counts.get(error_key, 0) + 1

        if isinstance(error, PropernetError):
            structured = error
            structured.context = {**structured.context, **(context or {}), "operation": operation}
        else:
            structured = PropernetError(
                message=str(error),
                category=category,
                context={
                    **(context or {}),
                    "operation": operation,
                    "error_type": type(error).__name__,
                    "stack_trace": traceback.format_exc() if self.logger.isEnabledFor(logging.DEBUG) else None
                }
            )

        self.logger.log(self._get_log_level(category),
                        f"{operation} failed: {category.value} error - {structured.message}",
                        extra={"error_details": structured.to_dict()})
        return structured

    def exit_code(self, error: PropernetError) -> int:
        """Map a structured error onto the CLI exit code contract."""
        if error.category in (ErrorCategory.USAGE, ErrorCategory.CONFIGURATION):
            return EXIT_USAGE
        return EXIT_DATA

    def _get_log_level(self, category: ErrorCategory) -> int:
        """Determine appropriate log level based on error category."""
        levels = {
            ErrorCategory.CONFIGURATION: logging.ERROR,
            ErrorCategory.USAGE: logging.ERROR,
            ErrorCategory.IO: logging.ERROR,
            ErrorCategory.PARSE: logging.ERROR,
            ErrorCategory.VALIDATION: logging.ERROR,
            ErrorCategory.COMPUTATION: logging.WARNING,
            ErrorCategory.UNKNOWN: logging.CRITICAL
        }
        return levels.get(category, logging.ERROR)

    def get_error_stats(self) -> Dict:
        """Get error statistics for diagnostics."""
        return {
            "total_errors": sum(self.error_counts.values()),
            "error_breakdown": dict(self.error_counts),
            "most_common": max(self.error_counts.items(), key=lambda x: x[1]) if self.error_counts else None
        }
