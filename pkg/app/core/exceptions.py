from typing import Any, Dict, Optional, List
from pydantic import BaseModel

# Process exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_PROPERTY_VIOLATION = 2

class ErrorDetail(BaseModel):
    """Model for detailed error information."""
    loc: List[str] = []
    msg: str
    type: str

class AppException(Exception):
    """Base exception for toolkit-specific exceptions.

    This class serves as the base for all library and command errors.
    It carries the detail message, the process exit code the command line
    front end maps it to, and optional context values for logging.
    """
    def __init__(
        self,
        detail: str = "An unexpected error occurred",
        exit_code: int = EXIT_INPUT_ERROR,
        context: Optional[Dict[str, Any]] = None
    ):
        self.detail = detail
        self.exit_code = exit_code
        self.context = context or {}
        super().__init__(detail)

    @property
    def name(self) -> str:
        return type(self).__name__

class InvalidInputError(AppException):
    """Exception raised when an input file or flag cannot be parsed."""
    def __init__(
        self,
        detail: str = "Invalid input",
        errors: Optional[List[ErrorDetail]] = None,
        context: Optional[Dict[str, Any]] = None
    ):
        self.errors = errors or []
        super().__init__(detail=detail, context=context)

class DistributionError(AppException):
    """Exception raised when a probability vector fails validation."""
    def __init__(self, detail: str = "Invalid distribution", context: Optional[Dict[str, Any]] = None):
        super().__init__(detail=detail, context=context)

class DomainError(AppException):
    """Exception raised when an argument lies outside an operation's domain."""
    def __init__(self, detail: str = "Argument outside the domain", context: Optional[Dict[str, Any]] = None):
        super().__init__(detail=detail, context=context)

class EffRangeError(AppException):
    """Exception raised when an effective exponential is asked to invert a value outside its image."""
    def __init__(self, detail: str = "Value outside the invertible range", context: Optional[Dict[str, Any]] = None):
        super().__init__(detail=detail, context=context)

class SupportError(AppException):
    """Exception raised when a value lies outside a distribution's or factor's support."""
    def __init__(self, detail: str = "Outside the support", context: Optional[Dict[str, Any]] = None):
        super().__init__(detail=detail, context=context)

class ConvergenceError(AppException):
    """Exception raised when adaptive quadrature exhausts its node budget.

    The best estimate reached is kept on the exception.
    """
    def __init__(
        self,
        detail: str = "Quadrature did not converge",
        estimate: float = float("nan"),
        error: float = float("inf"),
        context: Optional[Dict[str, Any]] = None
    ):
        self.estimate = estimate
        self.error = error
        super().__init__(detail=detail, context=context)

class SingularityError(AppException):
    """Exception raised when an entropic-form integrand denominator vanishes."""
    def __init__(self, detail: str = "Integrand denominator vanishes", context: Optional[Dict[str, Any]] = None):
        super().__init__(detail=detail, context=context)

class InversionError(AppException):
    """Exception raised when a cost-function average leaves the cost function's range."""
    def __init__(self, detail: str = "Cannot invert the cost function", context: Optional[Dict[str, Any]] = None):
        super().__init__(detail=detail, context=context)

class BudgetError(AppException):
    """Exception raised when program enumeration exceeds its step budget."""
    def __init__(self, detail: str = "Step budget exceeded", context: Optional[Dict[str, Any]] = None):
        super().__init__(detail=detail, context=context)

class PropertyViolationError(AppException):
    """Exception raised when a checked inequality does not hold."""
    def __init__(self, detail: str = "Property violated", context: Optional[Dict[str, Any]] = None):
        super().__init__(detail=detail, exit_code=EXIT_PROPERTY_VIOLATION, context=context)
