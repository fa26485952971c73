"""Arguments and helpers shared by every subcommand"""

import argparse
import sys
from typing import Any, List, Optional, Sequence, Tuple

from app.core import settings
from app.core.exceptions import InvalidInputError
from app.models.distribution import Distribution
from app.models.logkind import LogKind
from app.models.run_config import Base, OutputFormat, RunConfig
from app.services.ingest import parse_inline, read_distribution
from app.services.export import write_json, write_rows


class UsageError(InvalidInputError):
    """Raised instead of argparse's own exit so usage errors map to exit code 1."""


class CommandParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def parse_kinds(text: str) -> Tuple[LogKind, ...]:
    kinds = []
    for name in text.split(","):
        name = name.strip().lower()
        try:
            kinds.append(LogKind(name))
        except ValueError:
            raise argparse.ArgumentTypeError(f"unknown logarithm kind {name!r}") from None
    return tuple(kinds)


def add_standard_args(parser: argparse.ArgumentParser) -> None:
    """Output, unit and reproducibility flags every subcommand accepts."""
    parser.add_argument("--base", choices=[b.value for b in Base], default=Base.NATS.value,
                        help="units for quantities measured in information units")
    parser.add_argument("--format", dest="fmt", choices=[f.value for f in OutputFormat], default=OutputFormat.CSV.value)
    parser.add_argument("--output", "-o", default=None, help="write to this file instead of stdout")
    parser.add_argument("--pretty", action="store_true", help="round numbers for reading instead of full precision")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--threads", type=int, default=None, help="worker threads (defaults to THREADS)")
    parser.add_argument("--log-level", default=None, help="override LOG_LEVEL for this run")


def add_kind_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kinds", type=parse_kinds, default=(LogKind.NATURAL, LogKind.PLUS, LogKind.MINUS),
                        help="comma-separated subset of natural,plus,minus")


def add_distribution_args(parser: argparse.ArgumentParser, required: bool = True) -> None:
    """Input distribution: a `label weight` file or an inline list."""
    source = parser.add_mutually_exclusive_group(required=required)
    source.add_argument("--input", "-i", dest="input_path", help="file with one `label weight` pair per line")
    source.add_argument("--inline", help="inline distribution such as a=0.5,b=0.5 or 0.5,0.5")
    parser.add_argument("--counts", action="store_true", help="weights are counts; normalize them")
    parser.add_argument("--renormalize", action="store_true", help="rescale probabilities to sum to 1")


def build_config(args: argparse.Namespace, **overrides: Any) -> RunConfig:
    """Validate the parsed flags into a RunConfig."""
    values = {
        "subcommand": args.command,
        "input_path": getattr(args, "input_path", None),
        "inline": getattr(args, "inline", None),
        "counts": getattr(args, "counts", False),
        "renormalize": getattr(args, "renormalize", False),
        "base": args.base,
        "k_max": getattr(args, "k_max", None),
        "fmt": args.fmt,
        "output": args.output,
        "pretty": args.pretty,
        "seed": args.seed,
        "threads": args.threads or settings.THREADS,
    }
    if getattr(args, "kinds", None):
        values["kinds"] = args.kinds
    for name in ("rel_tol", "abs_tol", "max_len", "step_budget"):
        if getattr(args, name, None) is not None:
            values[name] = getattr(args, name)
    values.update(overrides)
    return RunConfig(**values)


def load_distribution(config: RunConfig) -> Distribution:
    if config.input_path is not None:
        return read_distribution(config.input_path, counts=config.counts, renormalize=config.renormalize)
    if config.inline is not None:
        return parse_inline(config.inline, counts=config.counts, renormalize=config.renormalize)
    raise InvalidInputError("no input distribution given; use --input or --inline")


def emit_table(config: RunConfig, header: Sequence[str], rows: List[Sequence[Any]]) -> None:
    write_rows(rows, header, path=config.output, fmt=config.fmt, pretty=config.pretty)


def emit_payload(config: RunConfig, payload: dict, header: Optional[Sequence[str]] = None,
                 rows: Optional[List[Sequence[Any]]] = None) -> None:
    """JSON payload for --format json, otherwise the CSV table."""
    if config.fmt is OutputFormat.JSON:
        write_json(payload, config.output)
    else:
        write_rows(rows or [], header or [], path=config.output, fmt=config.fmt, pretty=config.pretty)
