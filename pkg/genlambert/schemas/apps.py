"""
Schemas for the physical application reductions.
"""
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from genlambert.schemas.genw import SolutionSet

STANDARD_GRAVITY = 9.81


class DoubleWellParams(BaseModel):
    """Double-well Dirac delta model: well depth q and separation R."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    q: float = Field(..., gt=0.0, description="Well depth")
    R: float = Field(..., gt=0.0, description="Well separation")


class DoubleWellLevels(BaseModel):
    """Decay constants d+- and eigenenergies E+- = -d+-^2 / 2."""

    model_config = ConfigDict(frozen=True)

    d_plus: float
    d_minus: float
    e_plus: float
    e_minus: float


class DispersionParams(BaseModel):
    """
    Linear water-wave dispersion inputs.

    ``rho2 == 0`` selects the single-layer relation w^2 = g k tanh(k h).
    """

    model_config = ConfigDict(
        frozen=True,
        allow_inf_nan=False,
        json_schema_extra={"example": {"omega": 2.733357, "g": 9.81, "h": 1.0, "rho1": 1000.0, "rho2": 0.0}},
    )

    omega: float = Field(..., gt=0.0, description="Angular frequency (rad/s)")
    g: float = Field(default=STANDARD_GRAVITY, gt=0.0, description="Gravitational acceleration (m/s^2)")
    h: float = Field(..., gt=0.0, description="Depth (m)")
    rho1: float = Field(default=1000.0, ge=0.0, description="Lower layer density (kg/m^3)")
    rho2: float = Field(default=0.0, ge=0.0, description="Upper layer density (kg/m^3)")

    @property
    def two_layer(self) -> bool:
        """Whether the two-layer relation applies."""
        return self.rho2 > 0.0


class DispersionResult(BaseModel):
    """Wavenumber together with the dimensionless x = k h and y = w^2 h / g."""

    model_config = ConfigDict(frozen=True)

    k: float = Field(..., gt=0.0)
    x: float = Field(..., gt=0.0)
    y: float = Field(..., gt=0.0)
    two_layer: bool = False


class Dde2Params(BaseModel):
    """Characteristic equation (l - t1)(l - t2) = b1 e^{-l tau} (l - s1)."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    t1: float
    t2: float
    s1: float
    b1: float = Field(..., description="Feedback gain")
    tau: float = Field(..., gt=0.0, description="Delay")


class Dde2Result(BaseModel):
    """Real characteristic roots and the real-spectrum stability verdict."""

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    solutions: SolutionSet
    common_roots: tuple[float, ...] = Field(
        default=(),
        description="Roots contributed by a factor shared by both sides",
    )
    rightmost: Optional[float] = None
    rightmost_sign: Optional[int] = None
    real_spectrum_stable: Optional[bool] = Field(
        default=None,
        description="Rightmost real root negative; says nothing about complex roots",
    )
    verdict: str = "real-spectrum only"

    @model_validator(mode="after")
    def validate_rightmost(self) -> "Dde2Result":
        """The rightmost root must be one of the solutions."""
        if self.rightmost is not None and self.rightmost not in self.solutions.values:
            raise ValueError("rightmost root must be listed among the solutions")
        return self
