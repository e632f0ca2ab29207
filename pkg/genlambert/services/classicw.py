"""
Classical real Lambert W branches W_0 and W_-1.

Initial guesses follow the usual recipe: the branch-point series in
p = sqrt(2 (e a + 1)) near a = -1/e, logarithmic asymptotics elsewhere.
The guess is polished by Halley steps kept inside a bracket by bisection.
"""
import math
from typing import Optional, Union

from genlambert.core.config import Settings, get_settings
from genlambert.core.exceptions import DomainError
from genlambert.core.logging import get_logger
from genlambert.schemas.classicw import INV_E, ClassicBranch
from genlambert.services.roots import newton_bisect

logger = get_logger(__name__)

E = math.e
BRANCH_POINT_REGION = 0.25


def _product_form(a: float):
    """w e^w - a with first and second derivatives."""
    def evaluate(w: float) -> tuple[float, float, float]:
        ew = math.exp(w)
        return w * ew - a, ew * (w + 1.0), ew * (w + 2.0)
    return evaluate


def _log_form(log_a: float):
    """w + log(w) - log(a), for large positive arguments where w e^w overflows."""
    def evaluate(w: float) -> tuple[float, float, float]:
        return w + math.log(w) - log_a, 1.0 + 1.0 / w, -1.0 / (w * w)
    return evaluate


def _log_form_negative(log_minus_a: float):
    """w + log(-w) - log(-a) on the lower branch, away from the branch point."""
    def evaluate(w: float) -> tuple[float, float, float]:
        return w + math.log(-w) - log_minus_a, 1.0 + 1.0 / w, -1.0 / (w * w)
    return evaluate


def _branch_point_guess(a: float, branch: ClassicBranch) -> float:
    p = math.sqrt(max(0.0, 2.0 * (E * a + 1.0)))
    if branch is ClassicBranch.MINUS_ONE:
        p = -p
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p ** 3


def _validate(branch: ClassicBranch, a: float, slack: float) -> float:
    if math.isnan(a):
        raise DomainError(message="Argument is NaN", details={"a": a})
    if a < -INV_E:
        if a >= -INV_E - slack:
            logger.debug(f"Snapping {a!r} onto the branch point -1/e")
            return -INV_E
        raise DomainError(
            message="Lambert W is not real below -1/e",
            details={"a": a, "branch": int(branch)}
        )
    if branch is ClassicBranch.MINUS_ONE and a >= 0.0:
        raise DomainError(
            message="The W_-1 branch is defined on [-1/e, 0)",
            details={"a": a, "branch": int(branch)}
        )
    return a


def lambert_w(
    branch: Union[ClassicBranch, int],
    a: float,
    settings: Optional[Settings] = None,
) -> float:
    """
    Evaluate a real branch of the Lambert W function.

    Args:
        branch: ClassicBranch.PRINCIPAL (0) or ClassicBranch.MINUS_ONE (-1)
        a: Argument

    Returns:
        x with x e^x = a; x >= -1 on the principal branch, x <= -1 on W_-1

    Raises:
        DomainError: If a < -1/e, or a >= 0 on the W_-1 branch
    """
    settings = settings or get_settings()
    branch = ClassicBranch(branch)
    a = _validate(branch, a, settings.branch_point_slack)

    if a == -INV_E:
        return -1.0
    if branch is ClassicBranch.PRINCIPAL:
        return _principal(a, settings)
    return _minus_one(a, settings)


def _principal(a: float, settings: Settings) -> float:
    if a == 0.0:
        return 0.0
    if math.isinf(a):
        return math.inf
    if a < -BRANCH_POINT_REGION:
        guess = _branch_point_guess(a, ClassicBranch.PRINCIPAL)
    elif a <= E:
        guess = math.log1p(a)
    else:
        log_a = math.log(a)
        guess = log_a - math.log(log_a)

    if a > E:
        # W_0(a) lies in [1, log a] for a >= e
        log_a = math.log(a)
        return newton_bisect(_log_form(log_a), 1.0, max(log_a, 1.0 + 1e-16),
                             x0=guess, max_iter=settings.newton_max_iter)
    lo, hi = (-1.0, 0.0) if a < 0.0 else (0.0, 1.0)
    return newton_bisect(_product_form(a), lo, hi, x0=guess, max_iter=settings.newton_max_iter)


def _minus_one(a: float, settings: Settings) -> float:
    log_minus_a = math.log(-a)
    # W_-1(a) lies in [2 log(-a) - 1, -1]
    lo = 2.0 * log_minus_a - 1.0
    if a < -BRANCH_POINT_REGION:
        guess = _branch_point_guess(a, ClassicBranch.MINUS_ONE)
    else:
        guess = log_minus_a - math.log(-log_minus_a)
    if a > -BRANCH_POINT_REGION:
        return newton_bisect(_log_form_negative(log_minus_a), lo, -1.0,
                             x0=guess, max_iter=settings.newton_max_iter)
    return newton_bisect(_product_form(a), lo, -1.0, x0=guess, max_iter=settings.newton_max_iter)


def lambert_w0(a: float) -> float:
    """Principal branch shortcut."""
    return lambert_w(ClassicBranch.PRINCIPAL, a)


def lambert_wm1(a: float) -> float:
    """Lower branch shortcut."""
    return lambert_w(ClassicBranch.MINUS_ONE, a)


def real_branches(a: float) -> list[float]:
    """
    All real values of W(a) in ascending order.

    Returns:
        [] below -1/e, [-1] at -1/e, [W_-1(a), W_0(a)] on (-1/e, 0), [W_0(a)] otherwise
    """
    settings = get_settings()
    if a < -INV_E - settings.branch_point_slack:
        return []
    a = max(a, -INV_E)
    if a == -INV_E:
        return [-1.0]
    if a < 0.0:
        return [lambert_wm1(a), lambert_w0(a)]
    return [lambert_w0(a)]
