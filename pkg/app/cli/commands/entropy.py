"""`entropy`: natural, plus and minus entropies of one distribution"""

import argparse

from app.cli.common import add_distribution_args, add_kind_args, add_standard_args, build_config, emit_table, load_distribution
from app.core.error_handlers import with_error_handling
from app.core.exceptions import EXIT_OK
from app.core.logging import get_logger
from app.services.entropy import entropy, entropy_series, shannon_tail_bound

logger = get_logger("cli.entropy")

HEADER = ["kind", "entropy"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("entropy", help="generalized entropies H, H+ and H-")
    add_distribution_args(parser)
    add_kind_args(parser)
    parser.add_argument("--series", "--k-max", dest="k_max", type=int, default=None,
                        help="also report the series truncated after this many terms")
    parser.add_argument("--tail-bound", action="store_true", help="add the bound on |H+- - H|")
    add_standard_args(parser)
    parser.set_defaults(handler=run)


@with_error_handling
def run(args: argparse.Namespace) -> int:
    config = build_config(args)
    p = load_distribution(config)
    logger.info(f"entropy of {len(p)} outcomes, kinds {[k.value for k in config.kinds]}")

    header = list(HEADER)
    if config.k_max is not None:
        header.append("entropy_series")
    if args.tail_bound:
        header.append("tail_bound")
    bound = config.base.convert(shannon_tail_bound(p)) if args.tail_bound else None

    rows = []
    for kind in config.kinds:
        row = [kind.value, config.base.convert(entropy(kind, p))]
        if config.k_max is not None:
            row.append(config.base.convert(entropy_series(kind, p, config.k_max)))
        if args.tail_bound:
            row.append(bound)
        rows.append(row)
    emit_table(config, header, rows)
    return EXIT_OK
