"""Toy-machine programs and enumeration reports"""

from typing import Dict, Iterator, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


def output_order(y: str) -> Tuple[int, str]:
    """Sort key for outputs: by length, then lexicographically."""
    return (len(y), y)


class OutputStats(BaseModel):
    """Everything the enumeration learned about one output string."""
    model_config = ConfigDict(frozen=True)

    omega: float
    shortest: int
    # program length -> number of programs of that length producing the output
    length_counts: Dict[int, int]

    @property
    def program_count(self) -> int:
        return sum(self.length_counts.values())


class EnumerationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_len: int = Field(ge=1)
    per_output: Dict[str, OutputStats]
    z_partial: float
    program_count: int
    # program length -> number of valid programs of that length
    length_totals: Dict[int, int]
    steps: int = 0

    def outputs(self) -> Iterator[str]:
        """Outputs in (length, lexicographic) order."""
        return iter(sorted(self.per_output, key=output_order))

    def stats(self, y: str) -> Optional[OutputStats]:
        return self.per_output.get(y)
