"""Effective logarithms ln+/ln-, their series, inverses and the tabulated approximation"""

import functools
import math
from pathlib import Path
from typing import Optional, Tuple, Union

import numpy as np

from app.core.exceptions import DomainError, EffRangeError, InvalidInputError
from app.core.logging import get_logger
from app.core.utils import get_data_dir
from app.models.logkind import LogKind, PolyApprox

logger = get_logger("services.efflog")

# Lower cutoff of the inversion bracket
X_MIN = 1e-12
EXP_TOL = 1e-12
MAX_ITER = 200
DEFAULT_K_MAX = 30

TABLE1_FILE = "table1_coefficients.txt"


def _check_unit_interval(x: float) -> None:
    if math.isnan(x) or not (0.0 < x <= 1.0):
        raise DomainError(
            f"effective logarithms are defined on (0, 1], got {x!r}",
            context={"x": x},
        )


def self_power(x: float, base: float = math.e) -> float:
    """x^x evaluated as base^(x * log_base x)."""
    _check_unit_interval(x)
    if base == math.e:
        return math.exp(x * math.log(x))
    if base == 2.0:
        return 2.0 ** (x * math.log2(x))
    return base ** (x * math.log(x) / math.log(base))


def eff_log(kind: LogKind, x: float, base: Optional[float] = None) -> float:
    """Natural, plus or minus logarithm of x in (0, 1].

    ln+(x) = -(1 - x^x)/x and ln-(x) = -(x^-x - 1)/x, evaluated through
    expm1 of x ln x so small arguments keep full precision. With base set,
    x^x is formed as base^(x log_base x) instead.
    """
    _check_unit_interval(x)
    log_x = math.log(x)
    if kind is LogKind.NATURAL:
        return log_x
    if base is not None:
        power = self_power(x, base)
        if kind is LogKind.PLUS:
            return (power - 1.0) / x
        return (1.0 - 1.0 / power) / x
    u = x * log_x
    if kind is LogKind.PLUS:
        return math.expm1(u) / x
    return -math.expm1(-u) / x


def eff_log_series(kind: LogKind, x: float, k_max: int = DEFAULT_K_MAX) -> float:
    """Truncated series sum_{k=1..k_max} s_k x^(k-1) (ln x)^k / k!."""
    _check_unit_interval(x)
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    if x == 1.0:
        return 0.0
    log_x = math.log(x)
    if kind is LogKind.NATURAL:
        return log_x
    terms = []
    term = log_x
    for k in range(1, k_max + 1):
        terms.append(kind.series_sign(k) * term)
        term *= x * log_x / (k + 1)
    return math.fsum(terms)


def eff_log_excess(kind: LogKind, x: float, k_max: int = DEFAULT_K_MAX) -> float:
    """eff_log(kind, x) - ln x, summed from the series tail so it stays accurate far below ulp(ln x)."""
    _check_unit_interval(x)
    if kind is LogKind.NATURAL or x == 1.0:
        return 0.0
    log_x = math.log(x)
    terms = []
    term = x * log_x * log_x / 2.0
    for k in range(2, k_max + 1):
        terms.append(kind.series_sign(k) * term)
        term *= x * log_x / (k + 1)
    return math.fsum(terms)


def eff_exp(kind: LogKind, t: float) -> float:
    """Inverse of eff_log on [X_MIN, 1] by bisection refined with one secant step."""
    if math.isnan(t) or t > 0.0:
        raise EffRangeError(f"effective exponentials take t <= 0, got {t!r}", context={"t": t})
    if t == 0.0:
        return 1.0
    t_floor = eff_log(kind, X_MIN)
    if t < t_floor:
        raise EffRangeError(
            f"t = {t!r} is below eff_log({kind.value}, {X_MIN}) = {t_floor!r}",
            context={"t": t, "floor": t_floor},
        )

    lo, hi = X_MIN, 1.0
    g_lo, g_hi = t_floor - t, -t
    iterations = 0
    while hi - lo > EXP_TOL and iterations < MAX_ITER:
        mid = 0.5 * (lo + hi)
        g_mid = eff_log(kind, mid) - t
        if g_mid == 0.0:
            return mid
        if g_mid < 0.0:
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid
        iterations += 1

    if g_hi == g_lo:
        root = 0.5 * (lo + hi)
    else:
        root = lo - g_lo * (hi - lo) / (g_hi - g_lo)
        root = min(max(root, lo), hi)
    logger.debug(f"eff_exp({kind.value}, {t!r}) -> {root!r} after {iterations} bisections")
    return root


@functools.lru_cache(maxsize=8)
def _read_table(path: str) -> Tuple[Tuple[float, ...], Tuple[float, ...]]:
    plus, minus = [], []
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise InvalidInputError(f"cannot read coefficient table {path}: {e}") from e
    for line_no, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            j, a_plus, a_minus = int(fields[0]), float(fields[1]), float(fields[2])
        except (IndexError, ValueError) as e:
            raise InvalidInputError(f"{path}:{line_no}: expected 'j a_plus a_minus'") from e
        if j != len(plus):
            raise InvalidInputError(f"{path}:{line_no}: rows must be ordered j = 0..8")
        plus.append(a_plus)
        minus.append(a_minus)
    return tuple(plus), tuple(minus)


def load_poly_approx(kind: LogKind, path: Optional[Union[str, Path]] = None) -> PolyApprox:
    """Load the tabulated coefficients for the plus or minus family."""
    table_path = str(path or get_data_dir() / TABLE1_FILE)
    plus, minus = _read_table(table_path)
    coefficients = plus if kind is LogKind.PLUS else minus
    return PolyApprox(kind=kind, coefficients=coefficients)


def eff_exp_poly(approx: PolyApprox, t: float) -> float:
    """exp(-t) * sum_j a(j) t^j."""
    acc = 0.0
    for a in reversed(approx.coefficients):
        acc = acc * t + a
    return math.exp(-t) * acc


def poly_max_deviation(
    approx: PolyApprox,
    t_lo: Optional[float] = None,
    n_points: int = 1001,
) -> Tuple[float, float]:
    """Largest |eff_exp_poly(-t) - eff_exp(t)| over a uniform grid of [t_lo, 0].

    The tabulated polynomial takes the magnitude -t of the logarithm value.

    Returns:
        (max deviation, t where it occurs)
    """
    if t_lo is None:
        t_lo = eff_log(approx.kind, 1e-3)
    grid = np.linspace(t_lo, 0.0, n_points)
    deviations = np.array(
        [abs(eff_exp_poly(approx, -float(t)) - eff_exp(approx.kind, float(t))) for t in grid]
    )
    worst = int(np.argmax(deviations))
    logger.debug(f"table fit for {approx.kind.value}: max deviation {deviations[worst]!r} at t={grid[worst]!r}")
    return float(deviations[worst]), float(grid[worst])
