"""Logarithm family selector and the tabulated polynomial approximation"""

import enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator


class LogKind(str, enum.Enum):
    NATURAL = "natural"
    PLUS = "plus"
    MINUS = "minus"

    def series_sign(self, k: int) -> int:
        """Sign s_k of the k-th series term; the natural family keeps only k = 1."""
        if self is LogKind.NATURAL:
            return 1 if k == 1 else 0
        if self is LogKind.PLUS:
            return 1
        return 1 if k % 2 == 1 else -1


class PolyApprox(BaseModel):
    """Coefficients a(0..8) of exp(-t) * sum a(j) t^j for one effective family."""
    model_config = ConfigDict(frozen=True)

    kind: LogKind
    coefficients: Tuple[float, ...]

    @field_validator("kind")
    @classmethod
    def _effective_only(cls, value: LogKind) -> LogKind:
        if value is LogKind.NATURAL:
            raise ValueError("polynomial approximations exist only for the plus and minus families")
        return value

    @model_validator(mode="after")
    def _nine_coefficients(self) -> "PolyApprox":
        if len(self.coefficients) != 9:
            raise ValueError(f"expected 9 coefficients, got {len(self.coefficients)}")
        if self.coefficients[0] != 1.0:
            raise ValueError("a(0) must equal 1")
        return self
