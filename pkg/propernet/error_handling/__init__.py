"""
Error handling package for propernet.

Provides structured error classification, named pipeline errors and the
exit-code mapping used by the command line front end.
"""

from .exceptions import (
    ErrorCategory,
    PropernetError,
    NonContiguous,
    MalformedHeader,
    EmptyInput,
    WrongKind,
    InvalidEpsilon,
    NotCommonNode,
    TooFewSnapshots,
    OutOfRange,
    InvalidAlpha,
    EmptySeries,
    ZeroMean,
    SpanTooShort,
    ConfigurationError,
    UsageError,
)
from .handlers import ErrorHandler, EXIT_OK, EXIT_USAGE, EXIT_DATA

_error_handler = None


def get_error_handler() -> ErrorHandler:
    """Get or create the global error handler instance."""
    global _error_handler
    if _error_handler is None:
        _error_handler = ErrorHandler()
    return _error_handler


__all__ = [
    'ErrorCategory',
    'PropernetError',
    'NonContiguous',
    'MalformedHeader',
    'EmptyInput',
    'WrongKind',
    'InvalidEpsilon',
    'NotCommonNode',
    'TooFewSnapshots',
    'OutOfRange',
    'InvalidAlpha',
    'EmptySeries',
    'ZeroMean',
    'SpanTooShort',
    'ConfigurationError',
    'UsageError',
    'ErrorHandler',
    'EXIT_OK',
    'EXIT_USAGE',
    'EXIT_DATA',
    'get_error_handler',
]
