from app.cli.commands import codecheck, efflog, entropy, enumerate, figure1, relent, superstat
from app.cli.common import CommandParser
from app.core import settings

# Subcommand modules in help order
COMMANDS = (entropy, relent, figure1, codecheck, enumerate, superstat, efflog)


def build_parser() -> CommandParser:
    """Root parser with one subparser per command module."""
    parser = CommandParser(prog=settings.APP_NAME.lower(), description=settings.APP_DESCRIPTION)
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.APP_VERSION}")
    subparsers = parser.add_subparsers(dest="command", metavar="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser
