"""
r-Lambert function schemas.
"""
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class BranchStructure(BaseModel):
    """Monotone pieces of f(x) = x e^x + r x."""

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    r: float
    critical_points: tuple[float, ...] = Field(default=(), description="Real roots of e^x (x + 1) + r")
    branch_intervals: tuple[tuple[float, float], ...]

    @property
    def branch_count(self) -> int:
        """Number of real branches."""
        return len(self.critical_points) + 1

    @model_validator(mode="after")
    def validate_intervals(self) -> "BranchStructure":
        """Intervals must partition the line at the critical points."""
        if len(self.branch_intervals) != len(self.critical_points) + 1:
            raise ValueError("one more interval than critical points expected")
        return self


class RLambertQuery(BaseModel):
    """Solve x e^x + r x = n on one branch."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    r: float
    n: float = Field(..., description="Right-hand side")
    branch: int = Field(..., ge=0, description="Index into the ascending branch intervals")


class AsymptoticDirection(str, Enum):
    """Direction of the asymptotic approximation."""

    PLUS_INF = "plus-inf"
    MINUS_INF = "minus-inf"
