"""CSV and JSON report rendering with atomic file output"""

import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence, Union

from app.core.logging import get_logger
from app.core.utils import atomic_write_text, resolve_output_path
from app.models.run_config import OutputFormat

logger = get_logger("services.export")

FULL_PRECISION = ".16e"
PRETTY_PRECISION = ".6f"


def format_value(value: Any, pretty: bool = False) -> str:
    """Render one cell: floats in 17-significant-digit scientific notation unless pretty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return repr(value)
        return format(value, PRETTY_PRECISION if pretty else FULL_PRECISION)
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], pretty: bool = False) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v, pretty) for v in row])
    return buffer.getvalue()


def _jsonable(value: Any) -> Any:
    if hasattr(value, "model_dump"):
        return _jsonable(value.model_dump(mode="json"))
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, float) and not math.isfinite(value):
        return repr(value)
    if hasattr(value, "value") and not isinstance(value, (int, float, str)):
        return value.value
    return value


def render_json(payload: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n"


def emit(text: str, path: Optional[Union[str, Path]] = None) -> Optional[Path]:
    """Write text atomically to path, or to stdout when no path is given."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return None
    target = atomic_write_text(resolve_output_path(path), text)
    logger.info(f"wrote {target}")
    return target


def write_rows(
    rows: Iterable[Sequence[Any]],
    header: Sequence[str],
    path: Optional[Union[str, Path]] = None,
    fmt: OutputFormat = OutputFormat.CSV,
    pretty: bool = False,
) -> Optional[Path]:
    """Emit a table as CSV, or as a JSON list of records."""
    rows = [list(row) for row in rows]
    if fmt is OutputFormat.JSON:
        records = [dict(zip(header, row)) for row in rows]
        return emit(render_json(records), path)
    return emit(render_csv(header, rows, pretty), path)


def write_json(payload: Dict[str, Any], path: Optional[Union[str, Path]] = None) -> Optional[Path]:
    return emit(render_json(payload), path)
