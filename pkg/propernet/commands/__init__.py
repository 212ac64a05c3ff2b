"""
Commands package for propernet.

One command class per subcommand on top of BaseCommand, plus the argparse
front end and the atomic output writer.
"""

from .base import BaseCommand
from .output import Table, atomic_write, write_table
from .subcommands import (
    COMMANDS,
    ExtractCommand,
    SimilarityCommand,
    StatsCommand,
    SegmentCommand,
    TopologyCommand,
)
from .cli import build_parser, main, run_config

__all__ = [
    'BaseCommand',
    'Table',
    'atomic_write',
    'write_table',
    'COMMANDS',
    'ExtractCommand',
    'SimilarityCommand',
    'StatsCommand',
    'SegmentCommand',
    'TopologyCommand',
    'build_parser',
    'main',
    'run_config',
]
