"""`efflog`: effective logarithms, their series and inverses at a point, and the table fit report"""

import argparse

from app.cli.common import add_kind_args, add_standard_args, build_config, emit_table
from app.core.error_handlers import with_error_handling
from app.core.exceptions import EXIT_OK, InvalidInputError
from app.core.logging import get_logger
from app.models.logkind import LogKind
from app.services.efflog import DEFAULT_K_MAX, eff_exp, eff_exp_poly, eff_log, eff_log_series, load_poly_approx, poly_max_deviation

logger = get_logger("cli.efflog")

HEADER = ["quantity", "kind", "value"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("efflog", help="effective logarithms and exponentials at a point")
    add_kind_args(parser)
    parser.add_argument("--x", type=float, default=None, help="point in (0, 1] for the logarithms")
    parser.add_argument("--t", type=float, default=None, help="point t <= 0 for the exponentials; the table polynomial is evaluated at -t")
    parser.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
    parser.add_argument("--table-report", action="store_true",
                        help="largest deviation of the tabulated approximation from the exact inverse")
    add_standard_args(parser)
    parser.set_defaults(handler=run)


@with_error_handling
def run(args: argparse.Namespace) -> int:
    config = build_config(args)
    if args.x is None and args.t is None and not args.table_report:
        raise InvalidInputError("efflog needs --x, --t or --table-report")
    signed = [kind for kind in config.kinds if kind is not LogKind.NATURAL]

    rows = []
    if args.x is not None:
        for kind in config.kinds:
            rows.append(["eff_log", kind.value, eff_log(kind, args.x)])
            rows.append(["eff_log_series", kind.value, eff_log_series(kind, args.x, config.k_max)])
    if args.t is not None:
        for kind in config.kinds:
            rows.append(["eff_exp", kind.value, eff_exp(kind, args.t)])
        for kind in signed:
            rows.append(["eff_exp_poly", kind.value, eff_exp_poly(load_poly_approx(kind), -args.t)])
    if args.table_report:
        for kind in signed:
            deviation, where = poly_max_deviation(load_poly_approx(kind))
            rows.append(["table_max_deviation", kind.value, deviation])
            rows.append(["table_max_deviation_at", kind.value, where])
    logger.info(f"efflog produced {len(rows)} values")
    emit_table(config, HEADER, rows)
    return EXIT_OK
