"""`enumerate`: exhaustive toy-machine enumeration and per-output algorithmic entropies"""

import argparse

from app.cli.common import add_standard_args, build_config, emit_payload
from app.core.error_handlers import with_error_handling
from app.core.exceptions import EXIT_OK
from app.core.logging import get_logger
from app.models.logkind import LogKind
from app.models.run_config import LN2, RunConfig
from app.services.toyuniv import (
    DEFAULT_MAX_LEN,
    DEFAULT_STEP_BUDGET,
    algorithmic_entropy_series_literal,
    enumerate_programs,
    k_complexity,
    partition_partial,
    prior_weight,
    summary_row,
)

logger = get_logger("cli.enumerate")

HEADER = ["y", "omega", "shortest_bits", "k_nat", "k_plus", "k_minus"]
SERIES_HEADER = ["k_nat_series", "k_plus_series", "k_minus_series"]
NOT_FOUND = "not found"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("enumerate", help="enumerate toy-machine programs up to a length")
    parser.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN, help="longest program in bits")
    parser.add_argument("--step-budget", type=int, default=DEFAULT_STEP_BUDGET)
    parser.add_argument("--beta", type=float, default=LN2, help="damping per program bit (default ln 2)")
    parser.add_argument("--query", default=None, help="report only this output string")
    parser.add_argument("--series-literal", action="store_true",
                        help="add the truncated-series entropies next to the closed forms")
    parser.add_argument("--k-max", type=int, default=30, help="terms in the literal series")
    add_standard_args(parser)
    parser.set_defaults(handler=run)


def _row(config: RunConfig, report, y: str, beta: float, series: bool) -> list:
    if k_complexity(report, y) is None:
        row = [y, 0.0, NOT_FOUND, None, None, None]
        return row + [None] * len(SERIES_HEADER) if series else row
    summary = summary_row(report, y, beta)
    row = [
        y,
        summary["omega"],
        summary["shortest_bits"],
        config.base.convert(summary["k_nat"]),
        config.base.convert(summary["k_plus"]),
        config.base.convert(summary["k_minus"]),
    ]
    if series:
        row += [
            config.base.convert(algorithmic_entropy_series_literal(kind, report, y, config.k_max, beta))
            for kind in (LogKind.NATURAL, LogKind.PLUS, LogKind.MINUS)
        ]
    return row


@with_error_handling
def run(args: argparse.Namespace) -> int:
    config = build_config(args)
    logger.info(f"enumerating programs up to {config.max_len} bits")
    report = enumerate_programs(config.max_len, config.step_budget)

    header = HEADER + (SERIES_HEADER if args.series_literal else [])
    outputs = [args.query] if args.query is not None else list(report.outputs())
    rows = [_row(config, report, y, args.beta, args.series_literal) for y in outputs]

    payload = {
        "parameters": {
            "max_len": config.max_len,
            "step_budget": config.step_budget,
            "beta": args.beta,
            "base": config.base.value,
            "k_max": config.k_max,
        },
        "z_partial": report.z_partial,
        "z_beta": partition_partial(report, args.beta),
        "program_count": report.program_count,
        "steps": report.steps,
        "rows": [dict(zip(header, row)) for row in rows],
    }
    if args.query is not None:
        payload["prior_weight_normalized"] = prior_weight(report, args.query, args.beta, normalized=True)
    emit_payload(config, payload, header, rows)
    logger.info(f"{report.program_count} programs, {len(report.per_output)} outputs")
    return EXIT_OK
