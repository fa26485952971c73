"""`codecheck`: coding-gap, Kraft and c'-inequality checks; exit 2 on any violation"""

import argparse

import numpy as np

from app.cli.common import add_distribution_args, add_kind_args, add_standard_args, build_config, emit_table, load_distribution
from app.core.error_handlers import with_error_handling
from app.core.exceptions import EXIT_OK, InvalidInputError, PropertyViolationError
from app.core.logging import get_logger
from app.services.coding import theorem2_two_point_scan
from app.services.fuzz import check_trial, run_codecheck_trials

logger = get_logger("cli.codecheck")

HEADER = ["kind", "n", "seed", "gap", "kraft_sum", "holds"]
SCAN_HEADER = ["kind", "y", "cprime", "lhs", "mid", "rhs", "holds"]
SCAN_CPRIMES = (1.0, 2.0, 10.0)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("codecheck", help="check the coding theorems on a distribution or random trials")
    add_distribution_args(parser, required=False)
    add_kind_args(parser)
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--fuzz", type=int, metavar="COUNT", default=None, help="run COUNT random trials per kind")
    mode.add_argument("--two-point", action="store_true",
                      help="scan {y, 1-y} for y = 0.01..0.99 and c' in {1, 2, 10}")
    parser.add_argument("--n-max", type=int, default=16, help="largest support size in random trials")
    parser.add_argument("--cprime", type=float, default=2.0, help="c' for a single distribution")
    add_standard_args(parser)
    parser.set_defaults(handler=run)


def _finish(violations: int, total: int) -> int:
    if violations:
        raise PropertyViolationError(
            f"{violations} of {total} checks violated an inequality",
            context={"violations": violations, "total": total},
        )
    return EXIT_OK


@with_error_handling
def run(args: argparse.Namespace) -> int:
    config = build_config(args)

    if args.two_point:
        ys = np.round(np.arange(1, 100) / 100.0, 2).tolist()
        grid = [(y, cprime) for y in ys for cprime in SCAN_CPRIMES]
        rows, violations = [], 0
        for kind in config.kinds:
            results = theorem2_two_point_scan(kind, ys, SCAN_CPRIMES)
            for (y, _), r in zip(grid, results):
                rows.append([r.kind.value, y, r.cprime, config.base.convert(r.lhs),
                             config.base.convert(r.mid), config.base.convert(r.rhs), r.holds])
                violations += not r.holds
        emit_table(config, SCAN_HEADER, rows)
        return _finish(violations, len(rows))

    if args.fuzz is not None:
        logger.info(f"codecheck fuzz: {args.fuzz} trials, seed {config.seed}, {config.threads} threads")
        checks = run_codecheck_trials(args.fuzz, n_max=args.n_max, seed=config.seed,
                                      threads=config.threads, kinds=config.kinds)
    elif config.input_path is not None or config.inline is not None:
        p = load_distribution(config)
        checks = [check_trial(kind, p, args.cprime, config.seed) for kind in config.kinds]
    else:
        raise InvalidInputError("codecheck needs --input, --inline, --fuzz or --two-point")

    rows = [
        [c.kind.value, c.n, c.seed, config.base.convert(c.gap), c.kraft_sum, c.holds]
        for c in checks
    ]
    emit_table(config, HEADER, rows)
    return _finish(sum(1 for c in checks if not c.holds), len(checks))
