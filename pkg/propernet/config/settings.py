"""
Configuration management system for the propernet package.

This module provides analysis defaults with environment variable integration
and validation.
"""

import os
import logging
from dataclasses import dataclass, field
from typing import List

VALID_MODES = ("consecutive", "aggregate")
VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def _env_flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")


@dataclass
class AnalysisConfig:
    """Analysis defaults, overridable through PROPERNET_* environment variables."""

    # Significance
    alpha: float = field(default_factory=lambda: float(os.getenv("PROPERNET_ALPHA", "0.05")))
    mode: str = field(default_factory=lambda: os.getenv("PROPERNET_MODE", "consecutive"))

    # Signal statistics
    decimals: int = field(default_factory=lambda: int(os.getenv("PROPERNET_DECIMALS", "2")))

    # Link rules
    strict_colocation: bool = field(default_factory=lambda: _env_flag("PROPERNET_STRICT_COLOCATION", "false"))
    reciprocal_links: bool = field(default_factory=lambda: _env_flag("PROPERNET_RECIPROCAL_LINKS", "false"))

    # Topology path metrics
    exact_path_limit: int = field(default_factory=lambda: int(os.getenv("PROPERNET_EXACT_PATH_LIMIT", "5000")))
    path_sample_sources: int = field(default_factory=lambda: int(os.getenv("PROPERNET_PATH_SAMPLE_SOURCES", "64")))
    sample_seed: int = field(default_factory=lambda: int(os.getenv("PROPERNET_SAMPLE_SEED", "0")))

    # Logging Configuration
    log_level: str = field(default_factory=lambda: os.getenv("PROPERNET_LOG_LEVEL", "WARNING"))
    log_format: str = field(default_factory=lambda: os.getenv("PROPERNET_LOG_FORMAT", "%(levelname)s %(name)s: %(message)s"))

    def validate(self) -> List[str]:
        """Validate configuration and return list of validation errors."""
        errors = []

        if not (0.0 < self.alpha < 1.0):
            errors.append(f"PROPERNET_ALPHA must be strictly between 0 and 1. Got: {self.alpha}")

        if self.mode not in VALID_MODES:
            errors.append(f"PROPERNET_MODE must be one of: {', '.join(VALID_MODES)}. Got: {self.mode}")

        if self.decimals < 0:
            errors.append(f"PROPERNET_DECIMALS must be >= 0. Got: {self.decimals}")

        if self.exact_path_limit < 2:
            errors.append(f"PROPERNET_EXACT_PATH_LIMIT must be >= 2. Got: {self.exact_path_limit}")

        if self.path_sample_sources < 1:
            errors.append(f"PROPERNET_PATH_SAMPLE_SOURCES must be >= 1. Got: {self.path_sample_sources}")

        if self.log_level.upper() not in VALID_LOG_LEVELS:
            errors.append(f"PROPERNET_LOG_LEVEL must be one of: {VALID_LOG_LEVELS}. Got: {self.log_level}")

        return errors

    def setup_logging(self) -> None:
        """Send diagnostics to the error stream at the configured level."""
        logging.basicConfig(
            level=getattr(logging, self.log_level.upper()),
            format=self.log_format,
            force=True
        )

    def __post_init__(self):
        """Validate configuration after initialization."""
        validation_errors = self.validate()
        if validation_errors:
            error_message = "Configuration validation failed:\n" + "\n".join(f"  - {error}" for error in validation_errors)

            # Import here to avoid circular dependency
            from ..error_handling import ConfigurationError

            raise ConfigurationError(
                error_message,
                context={"validation_errors": validation_errors},
                user_message="The analysis configuration has invalid settings. Please check your environment variables.",
                recovery_suggestions=[
                    "Review and correct the environment variables mentioned in the errors",
                    "Unset PROPERNET_* variables to fall back to the defaults"
                ]
            )
