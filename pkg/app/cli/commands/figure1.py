"""`figure1`: K(n), K+(n) and K-(n) for data sizes n, with their relative deviations"""

import argparse

from app.cli.common import add_standard_args, build_config, emit_table
from app.core.error_handlers import with_error_handling
from app.core.exceptions import EXIT_OK
from app.core.logging import get_logger
from app.models.run_config import Base, LN2
from app.services.toyuniv import FIGURE1_MAX_N, figure1_table

logger = get_logger("cli.figure1")

HEADER = ["n", "k", "k_plus", "k_minus", "rel_dev_plus", "rel_dev_minus"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("figure1", help="effective algorithmic entropies against data size")
    parser.add_argument("--n-min", type=int, default=1)
    parser.add_argument("--n-max", type=int, default=FIGURE1_MAX_N)
    add_standard_args(parser)
    parser.set_defaults(handler=run, base=Base.BITS.value)


@with_error_handling
def run(args: argparse.Namespace) -> int:
    config = build_config(args)
    table = figure1_table(args.n_min, args.n_max)
    logger.info(f"figure1 rows n = {args.n_min}..{args.n_max}")

    # rows are computed in bits
    scale = 1.0 if config.base is Base.BITS else LN2
    rows = [
        [row.n, row.k * scale, row.k_plus * scale, row.k_minus * scale, row.rel_dev_plus, row.rel_dev_minus]
        for row in table
    ]
    emit_table(config, HEADER, rows)
    return EXIT_OK
