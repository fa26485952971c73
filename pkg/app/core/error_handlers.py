import functools
import sys
import traceback
from typing import Callable

from pydantic import ValidationError

from app.core.exceptions import AppException, EXIT_INPUT_ERROR
from app.core.logging import app_logger


def report_error(message: str) -> None:
    """Write a one-line error message for the user on stderr."""
    print(f"error: {message}", file=sys.stderr)


def with_error_handling(func: Callable[..., int]) -> Callable[..., int]:
    """Decorator mapping exceptions raised by a command to process exit codes.

    AppException subclasses carry their own exit code; pydantic validation
    failures and anything unexpected map to the input-error code.

    Args:
        func: The command handler to wrap; it returns an exit code

    Returns:
        Wrapped handler that never raises
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except AppException as exc:
            app_logger.error(
                f"{exc.name} in {func.__name__}: {exc.detail}",
                extra={"context": exc.context}
            )
            report_error(exc.detail)
            return exc.exit_code
        except ValidationError as exc:
            app_logger.error(f"Validation error in {func.__name__}: {exc.errors()}")
            first = exc.errors()[0] if exc.errors() else {"msg": str(exc)}
            report_error(str(first.get("msg", exc)))
            return EXIT_INPUT_ERROR
        except Exception as exc:
            app_logger.error(
                f"Unhandled exception in {func.__name__}: {str(exc)}",
                extra={"traceback": traceback.format_exc()}
            )
            report_error(f"unexpected failure: {exc}")
            return EXIT_INPUT_ERROR

    return wrapper
