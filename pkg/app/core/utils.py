import os
import tempfile
from pathlib import Path
from typing import Optional, Union

from app.core import settings


def create_dir_if_not_exists(directory: Union[str, Path]) -> None:
    """Create a directory if it doesn't exist.

    Args:
        directory: The directory path to create
    """
    os.makedirs(directory, exist_ok=True)


def get_app_dir() -> Path:
    """Get the app directory.

    Returns:
        Path to the app directory
    """
    return Path(__file__).parent.parent


def get_data_dir() -> Path:
    """Get the directory holding the shipped data files."""
    return get_app_dir() / "data"


def resolve_output_path(path: Union[str, Path], output_dir: Optional[str] = None) -> Path:
    """Resolve a relative output path against the configured output directory.

    Args:
        path: Output path given on the command line
        output_dir: Directory override; defaults to settings.OUTPUT_DIR

    Returns:
        Absolute or output-directory-relative path
    """
    path = Path(path)
    if path.is_absolute():
        return path
    return Path(output_dir or settings.OUTPUT_DIR) / path


def atomic_write_text(path: Union[str, Path], text: str) -> Path:
    """Write text to a temporary file next to the target and rename it into place.

    A failure before the rename leaves no partial target behind.

    Args:
        path: Target file path
        text: Full file contents

    Returns:
        The written path
    """
    path = Path(path)
    create_dir_if_not_exists(path.parent if str(path.parent) else ".")
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except OSError:
            pass
        raise
    return path
