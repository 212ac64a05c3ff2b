"""
Command line front end: ``propernet <subcommand> [flags]``.

Diagnostics go to stderr; data goes to the ``--out`` file only. Exit codes
are 0 on success, 1 on usage or configuration errors and 2 on data errors.
"""

import argparse
import logging
import sys
from dataclasses import replace
from typing import List, NoReturn, Optional

from pydantic import ValidationError

from ..config import AnalysisConfig
from ..config.run import RunConfig
from ..error_handling import EXIT_OK, UsageError, get_error_handler
from .subcommands import COMMANDS

logger = logging.getLogger(__name__)

ALL_METRICS = "node,link,neighbor,gamma"


class UsageErrorParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting with status 2."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(f"{self.prog}: {message}", context={"argv_error": message})


def build_parser() -> argparse.ArgumentParser:
    common = UsageErrorParser(add_help=False)
    common.add_argument("--input", required=True, help="raw interaction log (CSV)")
    common.add_argument("--format", required=True, choices=["wap", "dyadic"],
                        help="wap session log or dyadic message log")
    common.add_argument("--epsilon", required=True, dest="epsilons",
                        help="comma separated window lengths, e.g. 60,5m,1h,7d, or the presets wap/enron")
    common.add_argument("--metric", dest="metrics", default=ALL_METRICS,
                        help="comma separated subset of node,link,neighbor,gamma")
    common.add_argument("--alpha", type=float, default=None, help="null-model error rate (PROPERNET_ALPHA)")
    common.add_argument("--decimals", type=int, default=None,
                        help="quantization decimals for string statistics (PROPERNET_DECIMALS)")
    common.add_argument("--mode", choices=["consecutive", "aggregate"], default=None,
                        help="segmentation comparison mode (PROPERNET_MODE)")
    common.add_argument("--out", required=True, help="output file")
    common.add_argument("--emit", choices=["csv", "json"], default="csv")
    common.add_argument("--strict-colocation", dest="strict_colocation", action="store_true",
                        help="co-location links need overlapping sessions")
    common.add_argument("--reciprocal", action="store_true",
                        help="dyadic links need messages in both directions")
    common.add_argument("--log-level", dest="log_level", default=None,
                        help="diagnostic level on stderr (PROPERNET_LOG_LEVEL)")

    parser = UsageErrorParser(
        prog="propernet",
        description="Extract dynamic networks from interaction logs and find proper time intervals",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="command", required=True)
    for name, command in COMMANDS.items():
        sub = subparsers.add_parser(name, parents=[common], help=command.description,
                                    description=command.description)
        if name == "topology":
            sub.add_argument("--summary", action="store_true", help="average each property per epsilon")
    return parser


def run_config(args: argparse.Namespace, settings: AnalysisConfig) -> RunConfig:
    """Merge parsed flags with configuration defaults into a validated RunConfig."""
    try:
        return RunConfig(
            command=args.command,
            input=args.input,
            format=args.format,
            epsilons=args.epsilons,
            metrics=args.metrics,
            alpha=settings.alpha if args.alpha is None else args.alpha,
            decimals=settings.decimals if args.decimals is None else args.decimals,
            mode=args.mode or settings.mode,
            emit=args.emit,
            out=args.out,
            strict_colocation=args.strict_colocation or settings.strict_colocation,
            reciprocal=args.reciprocal or settings.reciprocal_links,
            summary=getattr(args, "summary", False),
        )
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or 'value'}: {err['msg']}" for err in e.errors()
        )
        raise UsageError(f"invalid arguments: {problems}", context={"errors": e.error_count()}) from e


def _operation(argv: Optional[List[str]]) -> str:
    words = sys.argv[1:] if argv is None else argv
    return words[0] if words else "propernet"


def main(argv: Optional[List[str]] = None) -> int:
    handler = get_error_handler()
    try:
        args = build_parser().parse_args(argv)
        settings = AnalysisConfig()
        if args.log_level:
            settings = replace(settings, log_level=args.log_level)
        settings.setup_logging()

        cfg = run_config(args, settings)
        command = COMMANDS[cfg.command](settings)
        table = command.run(cfg)
        logger.info("%s wrote %d rows to %s", cfg.command, len(table.rows), cfg.out)
        return EXIT_OK

    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK
    except Exception as e:
        structured = handler.handle_error(e, operation=_operation(argv))
        print(f"propernet: error: {structured.message}", file=sys.stderr)
        for suggestion in structured.recovery_suggestions:
            print(f"  hint: {suggestion}", file=sys.stderr)
        return handler.exit_code(structured)


if __name__ == "__main__":
    sys.exit(main())
