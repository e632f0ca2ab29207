"""
Bracketed one-dimensional root finding.

Safe Newton-Raphson: a Newton (or Halley) step is taken while it stays inside
the current bracket and shrinks it fast enough, otherwise the bracket is
bisected. The bracket is updated from the sign of every new evaluation.
"""
import math
import sys
from typing import Callable, Optional, Sequence

from scipy.optimize import brentq

from genlambert.core.exceptions import GenLambertException
from genlambert.core.logging import get_logger

logger = get_logger(__name__)

# f(x) -> (f, f') or (f, f', f'')
Evaluator = Callable[[float], Sequence[float]]

EPS = 2.220446049250313e-16


def newton_bisect(
    func: Evaluator,
    lo: float,
    hi: float,
    x0: Optional[float] = None,
    max_iter: int = 200,
    xtol: float = 4 * EPS,
    xatol: float = 1e-300,
) -> float:
    """
    Find the root of ``func`` bracketed by ``lo`` and ``hi``.

    Args:
        func: Returns (f, f') for Newton or (f, f', f'') for Halley steps
        lo: One end of the bracket
        hi: Other end of the bracket
        x0: Starting point inside the bracket (midpoint by default)
        max_iter: Iteration cap
        xtol: Relative step tolerance
        xatol: Absolute step tolerance, for roots at or near zero

    Returns:
        The root, accurate to a few ulps when f is well conditioned

    Raises:
        GenLambertException: If the end values do not bracket a root
    """
    f_lo = func(lo)[0]
    f_hi = func(hi)[0]
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        raise GenLambertException(
            message="Root is not bracketed",
            details={"lo": lo, "hi": hi, "f_lo": f_lo, "f_hi": f_hi}
        )

    # orient so that f(xl) < 0 < f(xh)
    xl, xh = (lo, hi) if f_lo < 0.0 else (hi, lo)
    x = 0.5 * (lo + hi) if x0 is None or not min(lo, hi) < x0 < max(lo, hi) else x0
    dx_old = abs(hi - lo)
    dx = dx_old

    values = func(x)
    if values[0] < 0.0:
        xl = x
    elif values[0] > 0.0:
        xh = x
    for _ in range(max_iter):
        f, df = values[0], values[1]
        if f == 0.0:
            return x
        step = None
        if df != 0.0 and math.isfinite(df):
            if len(values) > 2 and math.isfinite(values[2]):
                denom = df - 0.5 * f * values[2] / df
                step = f / denom if denom != 0.0 else f / df
            else:
                step = f / df
        candidate = x - step if step is not None else math.nan
        inside = min(xl, xh) < candidate < max(xl, xh)
        if not inside or abs(2.0 * step) > abs(dx_old):
            dx_old = dx
            dx = 0.5 * (xh - xl)
            x_new = xl + dx
        else:
            dx_old = dx
            dx = step
            x_new = candidate

        if x_new == x or abs(x_new - x) <= xtol * abs(x_new) + xatol:
            return x_new
        x = x_new
        values = func(x)
        if values[0] < 0.0:
            xl = x
        else:
            xh = x
        if xl == xh or abs(xh - xl) <= xtol * max(abs(xl), abs(xh)) + xatol:
            return x

    logger.warning(f"newton_bisect hit the iteration cap ({max_iter}) on [{lo}, {hi}]")
    return x


def brent_root(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    max_iter: int = 200,
    xtol: float = 4 * EPS,
    xatol: float = 1e-30,
) -> float:
    """
    Root of a scalar function on a sign-changing bracket with Brent's method.

    Infinite values are clipped to the largest float so the
    interpolation steps stay defined.

    Raises:
        GenLambertException: If the end values do not bracket a root
    """
    def finite(x: float) -> float:
        value = func(x)
        return math.copysign(sys.float_info.max, value) if math.isinf(value) else value

    try:
        root, info = brentq(
            finite, min(lo, hi), max(lo, hi),
            xtol=xatol, rtol=xtol, maxiter=max_iter, full_output=True, disp=False,
        )
    except ValueError as exc:
        raise GenLambertException(
            message="Root is not bracketed",
            details={"lo": lo, "hi": hi, "reason": str(exc)}
        )
    if not info.converged:
        logger.warning(f"brentq stopped after {info.iterations} iterations on [{lo}, {hi}]")
    return float(root)


def expand_until(
    predicate: Callable[[float], bool],
    anchor: float,
    direction: float,
    first_step: float = 1.0,
    max_steps: int = 2200,
) -> Optional[float]:
    """
    Walk away from ``anchor`` with doubling steps until ``predicate`` holds.

    Returns:
        The first probe satisfying the predicate, or None when the walk
        leaves the float range or runs out of steps
    """
    step = first_step
    for _ in range(max_steps):
        probe = anchor + direction * step
        if not math.isfinite(probe):
            return None
        if predicate(probe):
            return probe
        step *= 2.0
    return None


def approach_until(
    predicate: Callable[[float], bool],
    landmark: float,
    direction: float,
    width: float,
    max_steps: int = 2200,
) -> Optional[float]:
    """
    Walk towards ``landmark`` from ``landmark + direction * width`` with halving steps.

    Returns:
        The first probe satisfying the predicate, or None once the probe
        becomes indistinguishable from the landmark
    """
    delta = width
    for _ in range(max_steps):
        probe = landmark + direction * delta
        if probe == landmark:
            return None
        if predicate(probe):
            return probe
        delta *= 0.5
    return None
