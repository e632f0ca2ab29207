"""
Series expansion schemas.
"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from genlambert.schemas.polys import PolyValue


class SeriesKind(str, Enum):
    """The three published Taylor expansions."""

    ONE_UP_ONE_LOW = "one-up-one-low"
    TWO_UP = "two-up"
    R_LAMBERT = "r-lambert"


class SeriesExpansion(BaseModel):
    """
    A truncated Taylor expansion.

    ``coeffs[0]`` is the coefficient of the first power of the expansion
    variable; the constant term lives in ``constant``.
    """

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    kind: SeriesKind
    params: dict[str, float] = Field(..., description="Originating parameters (t, s | t1, t2 | r)")
    expansion_point: float = 0.0
    constant: float = Field(..., description="Value of the series at the expansion point")
    coeffs: tuple[PolyValue, ...] = ()
    radius: Optional[float] = Field(default=None, gt=0.0)
    terms_used: int = Field(..., ge=0)
    truncation_estimate: float = Field(..., ge=0.0, description="Magnitude of the first omitted term")
    converged: bool = Field(..., description="Whether the relative-term cutoff was reached")


class SeriesResult(BaseModel):
    """A series value together with its expansion."""

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    value: float
    expansion: SeriesExpansion
