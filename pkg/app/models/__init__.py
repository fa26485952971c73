# Immutable pydantic models for the toolkit's values and result records.
from app.models.coding import CodeCheckRow, CodeLengths, CodeSource, CostFunction, CostKind, Theorem2Result
from app.models.distribution import Distribution
from app.models.enumeration import EnumerationReport, OutputStats
from app.models.logkind import LogKind, PolyApprox
from app.models.run_config import Base, Figure1Row, OutputFormat, PerturbationGap, RunConfig
from app.models.superstat import BoltzmannSpec, EntropicForm, Family, LaplaceCheck, MixingDensity

__all__ = [
    "Base",
    "BoltzmannSpec",
    "CodeCheckRow",
    "CodeLengths",
    "CodeSource",
    "CostFunction",
    "CostKind",
    "Distribution",
    "EntropicForm",
    "EnumerationReport",
    "Family",
    "Figure1Row",
    "LaplaceCheck",
    "LogKind",
    "MixingDensity",
    "OutputFormat",
    "OutputStats",
    "PerturbationGap",
    "PolyApprox",
    "RunConfig",
    "Theorem2Result",
]
