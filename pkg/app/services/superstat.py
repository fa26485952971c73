"""Superstatistics: Boltzmann factors, Gamma-like mixing densities, Laplace checks and entropic forms"""

import math
from typing import Callable, Union

from scipy.optimize import brentq
from scipy.special import gammaln

from app.core.exceptions import ConvergenceError, DomainError, SingularityError, SupportError
from app.core.logging import get_logger, log_structured
from app.models.superstat import BoltzmannSpec, EntropicForm, Family, LaplaceCheck, MixingDensity
from app.services.quadrature import DEFAULT_MAX_PANELS, integrate, integrate_semi_infinite

logger = get_logger("services.superstat")

INFINITE = math.inf
# exp() overflows beyond this
MAX_EXP_ARG = 709.0


def _check_length(l: float) -> None:
    if math.isnan(l) or l < 0.0:
        raise DomainError(f"lengths are nonnegative, got {l!r}", context={"l": l})


def _check_probability(y: float) -> None:
    if math.isnan(y) or not (0.0 < y <= 1.0):
        raise DomainError(f"expected a value in (0, 1], got {y!r}", context={"y": y})


def boltzmann(spec: BoltzmannSpec, l: float) -> float:
    """B(l): e^(-beta l), (1 + p beta0 l)^(-1/p) or (1 - p beta0 l)^(1/p)."""
    _check_length(l)
    if spec.family is Family.STANDARD:
        return math.exp(-spec.beta * l)
    p, beta0 = spec.shape, spec.beta0
    if spec.family is Family.PLUS:
        return math.exp(-math.log1p(p * beta0 * l) / p)
    if l >= spec.support_end:
        raise SupportError(
            f"the minus factor is supported on l < {spec.support_end!r}, got {l!r}",
            context={"l": l, "support_end": spec.support_end},
        )
    return math.exp(math.log1p(-p * beta0 * l) / p)


def mixing_density(d: MixingDensity, beta: float) -> float:
    """f(beta) = (beta/(beta0 p))^((+-1 - p)/p) exp(-beta/(beta0 p)) / (beta0 p Gamma(1/p))."""
    if math.isnan(beta) or beta <= 0.0:
        raise DomainError(f"beta must be positive, got {beta!r}", context={"beta": beta})
    p, beta0 = d.shape, d.beta0
    sign = 1.0 if d.family is Family.PLUS else -1.0
    scaled = beta / (beta0 * p)
    log_f = (
        -math.log(beta0 * p)
        - float(gammaln(1.0 / p))
        + ((sign - p) / p) * math.log(scaled)
        - scaled
    )
    if log_f > MAX_EXP_ARG:
        return math.inf
    return math.exp(log_f)


def _check_rel_tol(rel_tol: float) -> None:
    if not (1e-12 <= rel_tol <= 1e-3):
        raise DomainError(f"rel_tol must lie in [1e-12, 1e-3], got {rel_tol!r}")


def laplace_forward(
    d: MixingDensity,
    l: float,
    rel_tol: float = 1e-10,
    max_panels: int = DEFAULT_MAX_PANELS,
) -> float:
    """Integral of f(beta) e^(-beta l) over beta in (0, inf) by adaptive quadrature.

    Raises:
        ConvergenceError: if the tolerance is not met within the panel budget
    """
    _check_length(l)
    _check_rel_tol(rel_tol)

    def integrand(beta: float) -> float:
        density = mixing_density(d, beta)
        if math.isinf(density):
            return density
        return density * math.exp(-beta * l)

    result = integrate_semi_infinite(
        integrand, a=0.0, scale=d.beta0, rel_tol=rel_tol, max_panels=max_panels
    )
    return result.value


def mixing_normalization(d: MixingDensity, rel_tol: float = 1e-10) -> float:
    """Total mass of the mixing density."""
    return laplace_forward(d, 0.0, rel_tol)


def laplace_check(d: MixingDensity, l: float, rel_tol: float = 1e-10) -> LaplaceCheck:
    """Compare the forward transform with the closed-form factor; never raises on non-convergence."""
    spec = d.boltzmann_spec()
    converged = True
    try:
        value = laplace_forward(d, l, rel_tol)
        error = rel_tol * abs(value)
    except ConvergenceError as exc:
        converged = False
        value, error = exc.estimate, exc.error
        log_structured(logger, "warning", "Laplace transform did not converge", {
            "family": d.family.value, "shape": d.shape, "beta0": d.beta0, "l": l, "detail": exc.detail,
        })

    closed_form = None
    if l < spec.support_end:
        closed_form = boltzmann(spec, l)
    residual = None
    if converged and closed_form is not None:
        residual = value - closed_form
    return LaplaceCheck(
        family=d.family,
        shape=d.shape,
        beta0=d.beta0,
        length=l,
        value=value,
        closed_form=closed_form,
        residual=residual,
        error_estimate=error,
        converged=converged,
    )


def _length(family: Family, shape: float, beta0: float, beta: float, y: float) -> float:
    log_y = math.log(y)
    if family is Family.STANDARD:
        return -log_y / beta
    if family is Family.PLUS:
        return math.expm1(-shape * log_y) / (shape * beta0)
    return -math.expm1(shape * log_y) / (shape * beta0)


def inverse_length(spec: BoltzmannSpec, y: float) -> float:
    """The length l with boltzmann(spec, l) = y."""
    _check_probability(y)
    return _length(spec.family, spec.shape, spec.beta0, spec.beta, y)


def _length_function(spec: BoltzmannSpec, self_identified: bool) -> Callable[[float], float]:
    if self_identified:
        return lambda y: _length(spec.family, y, spec.beta0, spec.beta, y)
    return lambda y: _length(spec.family, spec.shape, spec.beta0, spec.beta, y)


def _length_supremum(spec: BoltzmannSpec, self_identified: bool) -> float:
    """lim_{y -> 0+} of the length; lengths decrease in y."""
    if spec.family is Family.MINUS and not self_identified:
        return spec.support_end
    return math.inf


def entropic_form(
    spec: BoltzmannSpec,
    ystar: Union[float, str],
    x: float,
    abs_tol: float = 1e-10,
    self_identified: bool = False,
) -> EntropicForm:
    """h(x) = int_0^x (alpha + l(y)) / (1 - l(y)/|y*|) dy with alpha fixed by h(1) = 0.

    Args:
        spec: Boltzmann factor whose inverse gives the length l(y)
        ystar: the minimum length |y*|, a positive number or "infinite"
        x: upper limit in (0, 1]
        abs_tol: absolute tolerance for h and alpha
        self_identified: use the running probability y as the shape parameter

    Raises:
        SingularityError: if the denominator vanishes inside (0, 1)
    """
    _check_probability(x)
    if self_identified and spec.family is Family.STANDARD:
        raise DomainError("the standard factor has no shape parameter to identify")
    if isinstance(ystar, str):
        if ystar.lower() not in ("inf", "infinite", "infinity"):
            raise DomainError(f"ystar must be a positive number or 'infinite', got {ystar!r}")
        ystar = math.inf
    if math.isnan(ystar) or ystar <= 0.0:
        raise DomainError(f"ystar must be positive, got {ystar!r}")
    if math.isfinite(ystar) and ystar <= _length_supremum(spec, self_identified):
        raise SingularityError(
            f"1 - l(y)/{ystar!r} vanishes inside (0, 1)",
            context={"ystar": ystar, "family": spec.family.value},
        )

    length = _length_function(spec, self_identified)

    def denominator(y: float) -> float:
        return 1.0 - length(y) / ystar

    quad_tol = abs_tol / 8.0
    inv_d = integrate(lambda y: 1.0 / denominator(y), 0.0, 1.0, rel_tol=0.0, abs_tol=quad_tol)
    len_d = integrate(lambda y: length(y) / denominator(y), 0.0, 1.0, rel_tol=0.0, abs_tol=quad_tol)

    def normalization(alpha: float) -> float:
        return alpha * inv_d.value + len_d.value

    guess = -len_d.value / inv_d.value
    width = 1.0 + abs(guess)
    alpha = brentq(normalization, guess - width, guess + width, xtol=quad_tol)
    alpha_error = (len_d.error + abs(alpha) * inv_d.error) / inv_d.value + quad_tol

    h = integrate(lambda y: (alpha + length(y)) / denominator(y), 0.0, x, rel_tol=0.0, abs_tol=quad_tol)
    logger.debug(f"entropic form {spec.family.value} at x={x!r}: h={h.value!r}, alpha={alpha!r}")
    return EntropicForm(x=x, h=h.value, alpha=float(alpha), abs_error=h.error + x * alpha_error)
