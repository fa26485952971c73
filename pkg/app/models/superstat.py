"""Boltzmann factors, mixing densities and superstatistics result records"""

import enum
import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Family(str, enum.Enum):
    STANDARD = "standard"
    PLUS = "plus"
    MINUS = "minus"


class BoltzmannSpec(BaseModel):
    """B(l) for the standard family e^(-beta l) or the +/- Gamma-mixed families."""
    model_config = ConfigDict(frozen=True)

    family: Family
    shape: float = 1.0
    beta0: float = 1.0
    beta: float = 1.0

    @model_validator(mode="after")
    def _validate(self) -> "BoltzmannSpec":
        if not self.beta0 > 0:
            raise ValueError("beta0 must be positive")
        if self.family is Family.STANDARD:
            if not self.beta > 0:
                raise ValueError("beta must be positive")
        elif not (0.0 < self.shape <= 1.0):
            raise ValueError("shape must lie in (0, 1]")
        return self

    @classmethod
    def standard(cls, beta: float = 1.0) -> "BoltzmannSpec":
        return cls(family=Family.STANDARD, beta=beta)

    @classmethod
    def plus(cls, shape: float, beta0: float = 1.0) -> "BoltzmannSpec":
        return cls(family=Family.PLUS, shape=shape, beta0=beta0)

    @classmethod
    def minus(cls, shape: float, beta0: float = 1.0) -> "BoltzmannSpec":
        return cls(family=Family.MINUS, shape=shape, beta0=beta0)

    @property
    def support_end(self) -> float:
        """Upper end of the length support; finite only for the minus family."""
        if self.family is Family.MINUS:
            return 1.0 / (self.shape * self.beta0)
        return math.inf


class MixingDensity(BaseModel):
    """Gamma-like density f(beta) whose Laplace transform is a +/- Boltzmann factor."""
    model_config = ConfigDict(frozen=True)

    family: Family
    shape: float
    beta0: float = 1.0

    @model_validator(mode="after")
    def _validate(self) -> "MixingDensity":
        if self.family is Family.STANDARD:
            raise ValueError("mixing densities exist for the plus and minus families only")
        if not (0.0 < self.shape <= 1.0):
            raise ValueError("shape must lie in (0, 1]")
        if not self.beta0 > 0:
            raise ValueError("beta0 must be positive")
        return self

    def boltzmann_spec(self) -> BoltzmannSpec:
        return BoltzmannSpec(family=self.family, shape=self.shape, beta0=self.beta0)


class EntropicForm(BaseModel):
    model_config = ConfigDict(frozen=True)

    x: float
    h: float
    alpha: float
    abs_error: float = Field(ge=0.0)


class LaplaceCheck(BaseModel):
    """Forward Laplace transform of a mixing density against its closed form."""
    model_config = ConfigDict(frozen=True)

    family: Family
    shape: float
    beta0: float
    length: float
    value: float
    closed_form: Optional[float]
    residual: Optional[float]
    error_estimate: float
    converged: bool
