"""Adaptive quadrature on finite and semi-infinite ranges, backed by QUADPACK"""

import math
from typing import Callable, List, NamedTuple, Optional, Sequence

from scipy.integrate import quad

from app.core.exceptions import ConvergenceError
from app.core.logging import get_logger

logger = get_logger("services.quadrature")

# QUADPACK subinterval limit
DEFAULT_MAX_PANELS = 2000
TRUNCATION_RATIO = 1e-16


class QuadResult(NamedTuple):
    value: float
    error: float
    panels: int


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    max_panels: int = DEFAULT_MAX_PANELS,
    breakpoints: Optional[Sequence[float]] = None,
) -> QuadResult:
    """Adaptive Gauss-Kronrod integration over [a, b] with scipy.integrate.quad.

    Converges when the error estimate is at most max(abs_tol, rel_tol * |I|).

    Raises:
        ConvergenceError: if QUADPACK reports a failure or the result is not finite
    """
    if not b > a:
        raise ValueError(f"integration range [{a}, {b}] is empty")
    points = sorted(x for x in (breakpoints or ()) if a < x < b) or None
    limit = max(max_panels, len(points) + 3 if points else 0)
    result = quad(f, a, b, epsabs=abs_tol, epsrel=rel_tol, limit=limit, points=points, full_output=1)
    value, error, info = result[0], result[1], result[2]
    panels = int(info.get("last", 0))
    if len(result) > 3 or not math.isfinite(value):
        message = result[3] if len(result) > 3 else "the integral is not finite"
        raise ConvergenceError(
            f"quadrature on [{a}, {b}] failed: {message}",
            estimate=value,
            error=error,
            context={"panels": panels},
        )
    logger.debug(f"quadrature on [{a}, {b}] converged: {value!r} +/- {error!r} ({panels} panels)")
    return QuadResult(value=value, error=error, panels=panels)


def truncation_point(f: Callable[[float], float], a: float, scale: float, max_doublings: int = 1000) -> List[float]:
    """Geometric breakpoints a + scale * 2^k ending where |f| drops below 1e-16 of its sampled peak.

    Returns:
        Increasing breakpoints; the last one is the truncated upper limit
    """
    peak = 0.0
    for k in range(-20, 1):
        value = abs(f(a + scale * 2.0 ** k))
        if math.isfinite(value):
            peak = max(peak, value)
    points = [a + scale]
    for k in range(1, max_doublings):
        x = a + scale * 2.0 ** k
        value = abs(f(x))
        if not math.isfinite(value):
            continue
        if value >= peak:
            peak = value
        elif value < TRUNCATION_RATIO * peak:
            points.append(x)
            return points
        points.append(x)
    raise ConvergenceError(
        f"integrand did not decay below {TRUNCATION_RATIO} of its peak",
        context={"a": a, "scale": scale},
    )


def integrate_semi_infinite(
    f: Callable[[float], float],
    a: float = 0.0,
    scale: float = 1.0,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    max_panels: int = DEFAULT_MAX_PANELS,
) -> QuadResult:
    """Integrate over [a, inf) by truncating where the integrand is negligible."""
    points = truncation_point(f, a, scale)
    return integrate(
        f,
        a,
        points[-1],
        rel_tol=rel_tol,
        abs_tol=abs_tol,
        max_panels=max_panels,
        breakpoints=points[:-1],
    )
