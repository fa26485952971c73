"""Code lengths, cost functions and coding-theorem result records"""

import enum
import math
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from app.models.logkind import LogKind


class CodeSource(str, enum.Enum):
    IDEAL = "ideal"
    INTEGER_BITS = "integer_bits"
    USER_SUPPLIED = "user_supplied"


class CodeLengths(BaseModel):
    """Per-outcome code lengths in natural units."""
    model_config = ConfigDict(frozen=True)

    lengths: Tuple[float, ...]
    source: CodeSource = CodeSource.USER_SUPPLIED
    kind: Optional[LogKind] = None

    @model_validator(mode="after")
    def _validate(self) -> "CodeLengths":
        for value in self.lengths:
            if math.isnan(value) or value < 0.0:
                raise ValueError(f"code length {value} is negative")
        if self.source is CodeSource.IDEAL and self.kind is None:
            raise ValueError("ideal lengths must name their logarithm family")
        return self

    def __len__(self) -> int:
        return len(self.lengths)

    def in_bits(self) -> Tuple[float, ...]:
        return tuple(v / math.log(2.0) for v in self.lengths)


class CostKind(str, enum.Enum):
    IDENTITY = "identity"
    EXPONENTIAL = "exponential"


class CostFunction(BaseModel):
    """Nagumo-Kolmogorov cost: t -> t, or t -> (e^(rate t) - 1) / rate."""
    model_config = ConfigDict(frozen=True)

    tag: CostKind = CostKind.IDENTITY
    rate: float = 0.0

    @model_validator(mode="after")
    def _validate(self) -> "CostFunction":
        if self.tag is CostKind.EXPONENTIAL and self.rate == 0.0:
            raise ValueError("exponential cost needs a nonzero rate")
        return self

    @classmethod
    def identity(cls) -> "CostFunction":
        return cls()

    @classmethod
    def exponential(cls, rate: float) -> "CostFunction":
        return cls(tag=CostKind.EXPONENTIAL, rate=rate)


class Theorem2Result(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: LogKind
    cprime: float
    lhs: float
    mid: float
    rhs: float
    holds: bool


class CodeCheckRow(BaseModel):
    """One fuzz or scan trial: Theorem-1 gap, Kraft sum and the Theorem-2 verdict."""
    model_config = ConfigDict(frozen=True)

    kind: LogKind
    n: int
    seed: int
    gap: float
    kraft_sum: float
    holds: bool
