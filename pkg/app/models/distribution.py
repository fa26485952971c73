"""Finite probability distributions over labelled outcomes"""

import math
from typing import Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

NORMALIZATION_TOL = 1e-9


class Distribution(BaseModel):
    model_config = ConfigDict(frozen=True)

    outcomes: Tuple[str, ...]
    probs: Tuple[float, ...]

    @model_validator(mode="after")
    def _validate(self) -> "Distribution":
        if not self.probs:
            raise ValueError("a distribution needs at least one outcome")
        if len(self.outcomes) != len(self.probs):
            raise ValueError(
                f"{len(self.outcomes)} labels for {len(self.probs)} probabilities"
            )
        if len(set(self.outcomes)) != len(self.outcomes):
            raise ValueError("outcome labels must be unique")
        for label, p in zip(self.outcomes, self.probs):
            if not (0.0 <= p <= 1.0) or math.isnan(p):
                raise ValueError(f"probability of {label!r} is {p}, outside [0, 1]")
        total = math.fsum(self.probs)
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1 within {NORMALIZATION_TOL}")
        return self

    def __len__(self) -> int:
        return len(self.probs)

    @classmethod
    def from_probs(cls, probs: Sequence[float], outcomes: Optional[Sequence[str]] = None) -> "Distribution":
        labels = tuple(outcomes) if outcomes is not None else tuple(f"x{i}" for i in range(len(probs)))
        return cls(outcomes=labels, probs=tuple(float(p) for p in probs))

    @classmethod
    def from_weights(cls, weights: Sequence[float], outcomes: Optional[Sequence[str]] = None) -> "Distribution":
        """Normalize nonnegative weights (counts) into a distribution."""
        total = math.fsum(weights)
        if total <= 0.0 or any(w < 0 for w in weights):
            raise ValueError("weights must be nonnegative with a positive total")
        return cls.from_probs([w / total for w in weights], outcomes)

    @classmethod
    def uniform(cls, n: int) -> "Distribution":
        return cls.from_probs([1.0 / n] * n)

    @classmethod
    def deterministic(cls, outcomes: Sequence[str], index: int) -> "Distribution":
        probs = [0.0] * len(outcomes)
        probs[index] = 1.0
        return cls.from_probs(probs, outcomes)

    def prob(self, label: str) -> float:
        return self.probs[self.outcomes.index(label)]

    def same_outcomes(self, other: "Distribution") -> bool:
        return self.outcomes == other.outcomes

    def permuted(self, order: Sequence[int]) -> "Distribution":
        return Distribution(
            outcomes=tuple(self.outcomes[i] for i in order),
            probs=tuple(self.probs[i] for i in order),
        )
