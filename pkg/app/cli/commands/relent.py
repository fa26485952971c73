"""`relent`: generalized relative entropies of p against q"""

import argparse

from app.cli.common import add_kind_args, add_standard_args, build_config, emit_table
from app.core.error_handlers import with_error_handling
from app.core.exceptions import EXIT_OK, InvalidInputError
from app.core.logging import get_logger
from app.models.distribution import Distribution
from app.services.entropy import rel_entropy, rel_entropy_series, rel_entropy_series_closed
from app.services.ingest import parse_inline, read_distribution

logger = get_logger("cli.relent")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("relent", help="generalized relative entropy of p with respect to q")
    for name in ("p", "q"):
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument(f"--{name}", dest=f"{name}_path", help=f"file holding {name}")
        group.add_argument(f"--{name}-inline", dest=f"{name}_inline", help=f"inline {name}, e.g. a=0.5,b=0.5")
    parser.add_argument("--counts", action="store_true")
    parser.add_argument("--renormalize", action="store_true")
    add_kind_args(parser)
    parser.add_argument("--series", "--k-max", dest="k_max", type=int, default=None,
                        help="also report the literal series and its closed form")
    parser.add_argument("--negate", action="store_true",
                        help="flip the sign so the natural kind reports KL(p||q) >= 0")
    add_standard_args(parser)
    parser.set_defaults(handler=run)


def _load(path, inline, counts: bool, renormalize: bool, name: str) -> Distribution:
    if path is not None:
        return read_distribution(path, counts=counts, renormalize=renormalize)
    if inline is not None:
        return parse_inline(inline, counts=counts, renormalize=renormalize)
    raise InvalidInputError(f"no distribution given for {name}")


@with_error_handling
def run(args: argparse.Namespace) -> int:
    config = build_config(args)
    p = _load(args.p_path, args.p_inline, config.counts, config.renormalize, "p")
    q = _load(args.q_path, args.q_inline, config.counts, config.renormalize, "q")
    sign = -1.0 if args.negate else 1.0
    logger.info(f"relative entropy over {len(p)} outcomes, negate={args.negate}")

    header = ["kind", "rel_entropy"]
    if config.k_max is not None:
        header += ["rel_entropy_series", "rel_entropy_series_closed"]
    rows = []
    for kind in config.kinds:
        row = [kind.value, config.base.convert(sign * rel_entropy(kind, p, q))]
        if config.k_max is not None:
            row.append(config.base.convert(sign * rel_entropy_series(kind, p, q, config.k_max)))
            row.append(config.base.convert(sign * rel_entropy_series_closed(kind, p, q)))
        rows.append(row)
    emit_table(config, header, rows)
    return EXIT_OK
