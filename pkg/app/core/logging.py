"""Logging configuration for the toolkit"""

import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Dict, Any, Optional

# Create application logger
app_logger = logging.getLogger("app")
app_logger.setLevel(logging.WARNING)
app_logger.propagate = False

# Create formatter
formatter = logging.Formatter(
    "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)

# Console handler; stdout carries CSV/JSON reports
console_handler = logging.StreamHandler(sys.stderr)
console_handler.setFormatter(formatter)
app_logger.addHandler(console_handler)

file_handler: Optional[RotatingFileHandler] = None


def configure_logging(level: Optional[str] = None, log_file: Optional[str] = None) -> None:
    """Apply a log level and an optional rotating log file to the app logger."""
    global file_handler

    level = (level or os.getenv("LOG_LEVEL", "WARNING")).upper()
    if level in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        app_logger.setLevel(getattr(logging, level))

    if log_file and file_handler is None:
        try:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            file_handler = RotatingFileHandler(
                log_file,
                maxBytes=10 * 1024 * 1024,  # 10 MB
                backupCount=5,
            )
            file_handler.setFormatter(formatter)
            app_logger.addHandler(file_handler)
        except OSError as e:
            app_logger.error(f"Failed to set up file logging: {e}")


def get_logger(name: str) -> logging.Logger:
    """Get a logger for a specific module"""
    # Children propagate to the app logger and share its handlers
    return logging.getLogger(f"app.{name}")


def log_structured(logger: logging.Logger, level: str, message: str, data: Dict[str, Any]) -> None:
    """Log a message with structured data"""
    try:
        log_method = getattr(logger, level.lower(), logger.info)
        log_method(f"{message} - {data}")
    except Exception as e:
        logger.error(f"Error in log_structured: {e}")

# Export all logging components
__all__ = ["app_logger", "configure_logging", "get_logger", "log_structured"]
