"""
Generalized Lambert W schemas: parameters, equations and solution sets.
"""
import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from genlambert.core.exceptions import NoSolutionError


class GenWParams(BaseModel):
    """
    Parameters of e^x * prod(x - t_i) / prod(x - s_j) = a.

    A value shared by ``upper`` and ``lower`` is accepted here and rejected
    by the solver, which reports it as degenerate input.
    """

    model_config = ConfigDict(
        frozen=True,
        allow_inf_nan=False,
        json_schema_extra={"example": {"upper": [0.0, 0.0], "lower": [], "a": 2.718281828459045}},
    )

    upper: tuple[float, ...] = Field(default=(), description="Upper parameters t_1..t_n")
    lower: tuple[float, ...] = Field(default=(), description="Lower parameters s_1..s_m")
    a: float = Field(..., description="Right-hand side")

    @property
    def shared_values(self) -> list[float]:
        """Values present in both parameter lists."""
        return sorted(set(self.upper) & set(self.lower))


class SolutionRoot(BaseModel):
    """One real solution, labelled by its position in ascending order."""

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    x: float
    residual: float = Field(..., ge=0.0, description="|F(x) - a|")
    branch_index: int = Field(..., ge=0)
    multiplicity: int = Field(default=1, ge=1, description="2 for tangential (double) roots")
    ill_conditioned: bool = Field(
        default=False,
        description="Residual exceeds the tolerance only because |F'(x)| * ulp(x) does",
    )


class BracketInfo(BaseModel):
    """A monotone interval examined by the solver."""

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    lo: float
    hi: float
    sign: int = Field(..., description="Sign of F inside the interval")
    log_abs_lo: float = Field(..., description="Limit of log|F| at the left end")
    log_abs_hi: float = Field(..., description="Limit of log|F| at the right end")
    contains_root: bool


class SolutionSet(BaseModel):
    """All real solutions found on the search domain."""

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="constants")

    roots: tuple[SolutionRoot, ...] = ()
    bracket_report: tuple[BracketInfo, ...] = ()
    tol: float = Field(default=1e-12, gt=0.0)
    xmin: float = Field(default=-math.inf, description="Left end of the reported search domain")
    xmax: float = Field(default=math.inf, description="Right end of the reported search domain")
    explicit_domain: bool = Field(default=False, description="Whether the domain was imposed by the caller")

    @field_validator("roots")
    @classmethod
    def validate_ascending(cls, v: tuple[SolutionRoot, ...]) -> tuple[SolutionRoot, ...]:
        """Roots must be strictly ascending and indexed by position."""
        for i, root in enumerate(v):
            if root.branch_index != i:
                raise ValueError("branch_index must equal the position of the root")
            if i and not v[i - 1].x < root.x:
                raise ValueError("roots must be strictly ascending")
        return v

    @property
    def values(self) -> list[float]:
        """Root locations in ascending order."""
        return [root.x for root in self.roots]

    def __len__(self) -> int:
        return len(self.roots)

    def root(self, branch_index: int) -> SolutionRoot:
        """
        Get the root with the given ascending-order index.

        Raises:
            NoSolutionError: If there is no such root
        """
        if 0 <= branch_index < len(self.roots):
            return self.roots[branch_index]
        raise NoSolutionError(
            message=f"No real solution with branch index {branch_index}",
            details={"branch_index": branch_index, "roots_found": len(self.roots)}
        )


class RationalExpEquation(BaseModel):
    """e^{-c x} = a0 * prod(x - t_i) / prod(x - s_j)."""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    c: float = Field(..., description="Decay rate")
    a0: float = Field(..., description="Scale")
    upper_raw: tuple[float, ...] = ()
    lower_raw: tuple[float, ...] = ()

    @field_validator("c", "a0")
    @classmethod
    def validate_nonzero(cls, v: float) -> float:
        """c and a0 must not vanish."""
        if v == 0.0:
            raise ValueError("must be non-zero")
        return v


class CanonicalForm(BaseModel):
    """Canonical parameters together with the back-map x = X / c."""

    model_config = ConfigDict(frozen=True)

    params: GenWParams
    scale: float = Field(..., description="c in x = X / c")

    def backmap(self, canonical_x: float) -> float:
        """Map a canonical solution X back to the raw variable."""
        return canonical_x / self.scale


class ClosedFormKind(str, Enum):
    """Single-W closed forms for small parameter counts."""

    LOG = "log"
    UPPER_SHIFT = "upper_shift"
    LOWER_SHIFT = "lower_shift"


class ClosedForm(BaseModel):
    """
    Closed form of a generalized W value.

    log:          x = log(a)
    upper_shift:  x = shift + W_k(argument)
    lower_shift:  x = shift - W_k(argument)
    """

    model_config = ConfigDict(frozen=True)

    kind: ClosedFormKind
    shift: float = 0.0
    argument: float = Field(..., description="Argument handed to log or to the classical W")
    multiplicity: int = Field(..., ge=0, description="Number of real values the form yields")
