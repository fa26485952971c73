"""`superstat`: Boltzmann factors, Laplace checks, inverse lengths and entropic forms"""

import argparse

from app.cli.common import add_standard_args, build_config, emit_table
from app.core.error_handlers import with_error_handling
from app.core.exceptions import EXIT_OK, InvalidInputError
from app.core.logging import get_logger
from app.models.superstat import BoltzmannSpec, Family, MixingDensity
from app.services.superstat import boltzmann, entropic_form, inverse_length, laplace_check, mixing_normalization

logger = get_logger("cli.superstat")

HEADER = ["quantity", "value"]


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("superstat", help="superstatistical Boltzmann factors and entropic forms")
    parser.add_argument("--family", choices=[f.value for f in Family], default=Family.PLUS.value)
    parser.add_argument("--shape", type=float, default=0.5)
    parser.add_argument("--beta0", type=float, default=1.0)
    parser.add_argument("--beta", type=float, default=1.0, help="inverse temperature of the standard family")
    parser.add_argument("--l", dest="length", type=float, default=None, help="length at which to evaluate B(l)")
    parser.add_argument("--y", type=float, default=None, help="value whose inverse length is reported")
    parser.add_argument("--x", type=float, default=None, help="upper limit of the entropic form")
    parser.add_argument("--ystar", default="infinite", help="minimum length |y*|, or 'infinite'")
    parser.add_argument("--self-identified", action="store_true", help="use the running probability as shape")
    parser.add_argument("--rel-tol", type=float, default=1e-10)
    parser.add_argument("--abs-tol", type=float, default=1e-10)
    add_standard_args(parser)
    parser.set_defaults(handler=run)


def _ystar(text: str):
    try:
        return float(text)
    except ValueError:
        return text


@with_error_handling
def run(args: argparse.Namespace) -> int:
    config = build_config(args)
    if args.length is None and args.y is None and args.x is None:
        raise InvalidInputError("superstat needs at least one of --l, --y or --x")
    spec = BoltzmannSpec(family=Family(args.family), shape=args.shape, beta0=args.beta0, beta=args.beta)
    logger.info(f"superstat {spec.family.value} shape={spec.shape} beta0={spec.beta0}")
    convert = config.base.convert

    rows = []
    if args.length is not None:
        rows.append(["boltzmann", boltzmann(spec, args.length)])
        if spec.family is not Family.STANDARD:
            density = MixingDensity(family=spec.family, shape=spec.shape, beta0=spec.beta0)
            check = laplace_check(density, args.length, config.rel_tol)
            rows += [
                ["laplace_value", check.value],
                ["laplace_residual", check.residual],
                ["laplace_error_estimate", check.error_estimate],
                ["laplace_converged", check.converged],
            ]
            if check.converged:
                rows.append(["mixing_normalization", mixing_normalization(density, config.rel_tol)])
    if args.y is not None:
        rows.append(["inverse_length", convert(inverse_length(spec, args.y))])
    if args.x is not None:
        form = entropic_form(spec, _ystar(args.ystar), args.x, config.abs_tol, args.self_identified)
        rows += [
            ["entropic_form_h", convert(form.h)],
            ["entropic_form_alpha", convert(form.alpha)],
            ["entropic_form_abs_error", convert(form.abs_error)],
        ]
    emit_table(config, HEADER, rows)
    return EXIT_OK
