"""Command-line run configuration and small report records"""

import enum
import math
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.models.logkind import LogKind

LN2 = math.log(2.0)


class Base(str, enum.Enum):
    NATS = "nats"
    BITS = "bits"

    def convert(self, value_nats: float) -> float:
        """Express a natural-unit quantity in this base (one division by ln 2 for bits)."""
        return value_nats / LN2 if self is Base.BITS else value_nats


class OutputFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    subcommand: str
    input_path: Optional[str] = None
    inline: Optional[str] = None
    counts: bool = False
    renormalize: bool = False
    kinds: Tuple[LogKind, ...] = (LogKind.NATURAL, LogKind.PLUS, LogKind.MINUS)
    base: Base = Base.NATS
    k_max: Optional[int] = Field(default=None, ge=1)
    rel_tol: float = Field(default=1e-10, ge=1e-12, le=1e-3)
    abs_tol: float = Field(default=1e-10, gt=0.0)
    max_len: int = Field(default=24, ge=1)
    step_budget: int = Field(default=10**8, ge=1)
    fmt: OutputFormat = OutputFormat.CSV
    output: Optional[str] = None
    pretty: bool = False
    seed: int = 42
    threads: int = Field(default=1, ge=1)


class PerturbationGap(BaseModel):
    model_config = ConfigDict(frozen=True)

    entropy_gap: float
    l1_distance: float


class Figure1Row(BaseModel):
    """One data-size row of the algorithmic-entropy comparison, in bits."""
    model_config = ConfigDict(frozen=True)

    n: int
    k: float
    k_plus: float
    k_minus: float
    rel_dev_plus: float
    rel_dev_minus: float
