"""
Base class for propernet subcommands.

This module provides the validate/execute/run contract every subcommand
follows, plus the shared log loading step.
"""

from abc import ABC, abstractmethod
from typing import Optional

from ..config import AnalysisConfig, get_config
from ..config.run import RunConfig
from ..error_handling import ErrorHandler, PropernetError, UsageError
from ..network.ingest import EventLog, LogKind, clean, parse
from .output import Table, write_table


class BaseCommand(ABC):
    """Base class for subcommands with built-in validation and error wrapping."""

    name: str = "command"
    description: str = ""

    def __init__(self, settings: Optional[AnalysisConfig] = None):
        self.settings = settings or get_config()

    def validate_input(self, cfg: RunConfig) -> bool:
        """Check flag combinations the run model cannot express on its own."""
        return True

    @abstractmethod
    def execute(self, cfg: RunConfig) -> Table:
        """Compute the command's output table."""

    def load_log(self, cfg: RunConfig) -> EventLog:
        """Parse the input log; session logs are cleaned before use."""
        log = parse(cfg.input, cfg.format)
        if log.kind is LogKind.SESSION:
            log = clean(log)
        return log

    def run(self, cfg: RunConfig) -> Table:
        """Validate, execute and write the output file."""
        try:
            if not self.validate_input(cfg):
                raise UsageError(
                    f"Invalid flags for {self.name}",
                    context={"command": self.name, "metrics": [m.value for m in cfg.metrics]}
                )
            table = self.execute(cfg)
            write_table(table, cfg.out, cfg.emit)
            return table

        except PropernetError:
            raise  # Re-raise structured errors
        except Exception as e:
            raise PropernetError(
                f"Error in {self.name}: {str(e)}",
                ErrorHandler().classify_error(e),
                context={
                    "command": self.name,
                    "error_type": type(e).__name__,
                    "original_error": str(e)
                }
            ) from e
