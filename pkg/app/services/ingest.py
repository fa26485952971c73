"""Reading distributions from `label weight` files and inline strings"""

import math
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from pydantic import ValidationError

from app.core.exceptions import DistributionError, ErrorDetail, InvalidInputError
from app.core.logging import get_logger
from app.models.distribution import Distribution

logger = get_logger("services.ingest")


def _build(labels: Sequence[str], weights: Sequence[float], counts: bool, renormalize: bool, source: str) -> Distribution:
    if not weights:
        raise InvalidInputError(f"{source}: no outcomes found")
    for label, w in zip(labels, weights):
        if math.isnan(w) or math.isinf(w) or w < 0.0:
            raise DistributionError(f"{source}: weight of {label!r} is {w}, expected a finite nonnegative number")
    try:
        if counts or renormalize:
            return Distribution.from_weights(weights, labels)
        return Distribution.from_probs(weights, labels)
    except (ValidationError, ValueError) as e:
        if isinstance(e, ValidationError):
            message = "; ".join(err["msg"] for err in e.errors())
        else:
            message = str(e)
        raise DistributionError(f"{source}: {message}") from e


def _parse_number(text: str) -> float:
    # fractions such as 1/3 are accepted
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def read_distribution(
    path: Union[str, Path],
    counts: bool = False,
    renormalize: bool = False,
) -> Distribution:
    """Read one `label weight` pair per line; blank lines and `#` comments are skipped.

    Args:
        path: input file
        counts: weights are counts and get normalized
        renormalize: weights are probabilities that may not sum to exactly 1

    Raises:
        InvalidInputError: unreadable file or malformed lines
        DistributionError: the weights do not form a distribution
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidInputError(f"cannot read {path}: {e.strerror or e}") from e

    labels: List[str] = []
    weights: List[float] = []
    errors: List[ErrorDetail] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            errors.append(ErrorDetail(loc=[str(path), str(line_no)], msg="expected 'label weight'", type="format"))
            continue
        try:
            weight = _parse_number(fields[1])
        except (ValueError, ZeroDivisionError):
            errors.append(ErrorDetail(loc=[str(path), str(line_no)], msg=f"bad weight {fields[1]!r}", type="value"))
            continue
        labels.append(fields[0])
        weights.append(weight)

    if errors:
        first = errors[0]
        raise InvalidInputError(f"{':'.join(first.loc)}: {first.msg}", errors=errors)
    logger.debug(f"read {len(weights)} outcomes from {path}")
    return _build(labels, weights, counts, renormalize, str(path))


def _split_inline(spec: str) -> Tuple[List[str], List[float]]:
    labels: List[str] = []
    weights: List[float] = []
    for i, item in enumerate(part.strip() for part in spec.split(",")):
        if not item:
            raise InvalidInputError(f"empty entry at position {i} in {spec!r}")
        label, sep, value = item.rpartition("=")
        if not sep:
            label = f"x{i}"
        try:
            weights.append(_parse_number(value.strip()))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInputError(f"bad weight {value!r} in {spec!r}") from e
        labels.append(label.strip())
    return labels, weights


def parse_inline(spec: str, counts: bool = False, renormalize: bool = False) -> Distribution:
    """Parse `a=0.5,b=0.5` or `0.5,0.5` (labelled x0, x1, ...)."""
    labels, weights = _split_inline(spec)
    return _build(labels, weights, counts, renormalize, "inline distribution")
