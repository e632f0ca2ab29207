"""
Overflow-safe polynomial values.
"""
import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

LN2 = math.log(2.0)


class PolyValue(BaseModel):
    """
    A real number stored as ``value * exp(log_scale)``.

    When ``log_scale`` is present ``value`` lies in [1, 2) or (-2, -1], or is zero.
    Scales produced by the polynomial evaluators are usually integer multiples
    of log(2), which lets ``to_float`` rebuild the number exactly.
    """

    model_config = ConfigDict(frozen=True)

    value: float = Field(..., description="Mantissa")
    log_scale: Optional[float] = Field(default=None, description="Natural-log exponent")

    @property
    def sign(self) -> int:
        """Sign of the represented number."""
        if self.value > 0:
            return 1
        if self.value < 0:
            return -1
        return 0

    def log_abs(self) -> float:
        """Natural logarithm of the magnitude (``-inf`` for zero)."""
        if self.value == 0.0:
            return -math.inf
        return math.log(abs(self.value)) + (self.log_scale or 0.0)

    def to_float(self) -> float:
        """Plain float, saturating to +-inf or 0 outside double range."""
        if self.log_scale is None or self.value == 0.0:
            return self.value
        k = round(self.log_scale / LN2)
        try:
            if abs(k * LN2 - self.log_scale) <= 1e-9 * max(1.0, abs(self.log_scale)):
                return math.ldexp(self.value, k)
            return self.value * math.exp(self.log_scale)
        except OverflowError:
            return math.copysign(math.inf, self.value)

    def __neg__(self) -> "PolyValue":
        return PolyValue(value=-self.value, log_scale=self.log_scale)
