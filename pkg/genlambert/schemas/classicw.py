"""
Classical Lambert W branch identifiers.
"""
import math
from enum import Enum

INV_E = math.exp(-1.0)


class ClassicBranch(int, Enum):
    """Real branches of the classical Lambert W function."""

    PRINCIPAL = 0
    MINUS_ONE = -1

    @property
    def domain(self) -> tuple[float, float]:
        """Closed-open argument interval on which the branch is real."""
        if self is ClassicBranch.PRINCIPAL:
            return (-INV_E, math.inf)
        return (-INV_E, 0.0)
