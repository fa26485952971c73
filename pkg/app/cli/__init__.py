"""Command-line package for the toolkit.

Every subcommand lives in app.cli.commands and is wired in by the router.
"""

from typing import Optional, Sequence

from app.cli.common import UsageError
from app.cli.router import build_parser
from app.core import app_logger, configure_logging, settings
from app.core.error_handlers import report_error
from app.core.exceptions import EXIT_INPUT_ERROR


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, run the chosen subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        report_error(e.detail)
        return EXIT_INPUT_ERROR
    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

    configure_logging(args.log_level or settings.LOG_LEVEL, settings.LOG_FILE)
    app_logger.info(f"{settings.APP_NAME} {args.command} starting")
    code = args.handler(args)
    app_logger.info(f"{settings.APP_NAME} {args.command} finished with exit code {code}")
    return code


__all__ = ["main"]
