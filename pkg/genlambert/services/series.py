"""
Taylor expansions of generalized W values in the right-hand side.

one-up-one-low:  W(t; s; a) = t + sum_n T L_{n-1}^(1)(n T) e^{-n t} a^n / n,  T = t - s
two-up:          W(t1, t2;; a) = t1 - sum_n (n e^{-t1} / T)^n B_{n-1}(-2 / (n T)) a^n / (n n!),  T = t2 - t1
r-lambert:       W_r(x) = x / (r + 1) + sum_{n>=2} M_{n-1}^(n)(y) y^n x^n / n!,  y = 1 / (r + 1)

Coefficients are kept log-scaled so that high orders never overflow; terms
are formed as sign * exp(log|c_n| + n log|a|).
"""
import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from genlambert.core.config import Settings, get_settings
from genlambert.core.exceptions import (
    ConvergenceDomainError,
    DegenerateInputError,
    DivergingSeriesError,
    DomainError,
)
from genlambert.core.logging import get_logger
from genlambert.schemas.polys import PolyValue
from genlambert.schemas.series import SeriesExpansion, SeriesKind, SeriesResult
from genlambert.services.polys import bessel_poly, fraction_to_poly_value, laguerre, m_poly_exact

logger = get_logger(__name__)


def radius_one_up_one_low(t: float, s: float) -> float:
    """
    Radius of convergence e^{(t+s)/2 - 2 sqrt(s - t)} of the one-up-one-low series.

    Raises:
        DomainError: If t >= s
    """
    if not t < s:
        raise DomainError(
            message="The radius formula needs t < s",
            details={"t": t, "s": s}
        )
    return math.exp(0.5 * (t + s) - 2.0 * math.sqrt(s - t))


def branch_point_radius_one_up_one_low(t: float, s: float) -> float:
    """
    Distance from a = 0 to the branch point of the series, for t < s.

    The critical points of e^x (x - t) / (x - s) solve (x - t)(x - s) = s - t;
    the one left of t carries the critical value d e^c / (c - s)^2 with
    d = s - t, and this value is where the expanded solution stops being
    analytic. It is the limit of the coefficient ratio and never exceeds
    radius_one_up_one_low.

    Raises:
        DomainError: If t >= s
    """
    if not t < s:
        raise DomainError(
            message="The branch-point radius needs t < s",
            details={"t": t, "s": s}
        )
    d = s - t
    c = 0.5 * (t + s) - math.sqrt(0.25 * d * d + d)
    return d * math.exp(c) / (c - s) ** 2


def _one_up_one_low_coefficient(t: float, big_t: float, n: int) -> PolyValue:
    poly = laguerre(n - 1, 1, n * big_t)
    if poly.value == 0.0:
        return poly
    return PolyValue(
        value=math.copysign(poly.value, poly.value * big_t),
        log_scale=(poly.log_scale or 0.0) + math.log(abs(big_t)) - n * t - math.log(n),
    )


def one_up_one_low_coefficients(t: float, s: float, n_max: int) -> list[PolyValue]:
    """Coefficients c_1..c_{n_max} of a^n in the one-up-one-low series."""
    if t == s:
        raise DegenerateInputError(message="t and s coincide", details={"t": t, "s": s})
    return [_one_up_one_low_coefficient(t, t - s, n) for n in range(1, n_max + 1)]


def estimate_radius_one_up_one_low(t: float, s: float, n: int) -> float:
    """
    Finite-order ratio |c_n / c_{n+1}| of consecutive coefficients.

    Tends to the radius of convergence as n grows.
    """
    if n < 1:
        raise DomainError(message="Ratio estimate needs n >= 1", details={"n": n})
    if t == s:
        raise DegenerateInputError(message="t and s coincide", details={"t": t, "s": s})
    big_t = t - s
    current = _one_up_one_low_coefficient(t, big_t, n)
    following = _one_up_one_low_coefficient(t, big_t, n + 1)
    return math.exp(current.log_abs() - following.log_abs())


def _two_up_coefficient(t1: float, big_t: float, n: int) -> PolyValue:
    poly = bessel_poly(n - 1, -2.0 / (n * big_t))
    if poly.value == 0.0:
        return poly
    sign = -1.0 if big_t > 0.0 or n % 2 == 0 else 1.0
    log_scale = (
        (poly.log_scale or 0.0)
        + n * (math.log(n) - t1 - math.log(abs(big_t)))
        - math.log(n)
        - math.log(math.factorial(n))
    )
    return PolyValue(value=math.copysign(poly.value, sign * poly.value), log_scale=log_scale)


def two_up_coefficients(t1: float, t2: float, n_max: int) -> list[PolyValue]:
    """Coefficients c_1..c_{n_max} of a^n in the two-up series."""
    _check_order(n_max)
    if t1 == t2:
        raise DegenerateInputError(message="t1 and t2 coincide", details={"t1": t1, "t2": t2})
    return [_two_up_coefficient(t1, t2 - t1, n) for n in range(1, n_max + 1)]


@lru_cache(maxsize=8192)
def _r_lambert_coefficient(r: float, n: int) -> PolyValue:
    y = 1 / (Fraction(r) + 1)
    if n == 1:
        return fraction_to_poly_value(y)
    exact = m_poly_exact(n - 1, n, y) * y ** n / math.factorial(n)
    return fraction_to_poly_value(exact)


def r_lambert_coefficients(r: float, n_max: int) -> list[PolyValue]:
    """Coefficients c_1..c_{n_max} of x^n in the expansion of W_r(x)."""
    _check_order(n_max)
    if r == -1.0:
        raise DegenerateInputError(message="The r-Lambert series needs r != -1", details={"r": r})
    return [_r_lambert_coefficient(r, n) for n in range(1, n_max + 1)]


def _term(coeff: PolyValue, n: int, log_z: float, z_negative: bool) -> float:
    if coeff.value == 0.0 or log_z == -math.inf:
        return 0.0
    try:
        magnitude = math.exp(coeff.log_abs() + n * log_z)
    except OverflowError:
        magnitude = math.inf
    negative = (coeff.sign < 0) != (z_negative and n % 2 == 1)
    return -magnitude if negative else magnitude


def _sum_series(
    kind: SeriesKind,
    params: dict[str, float],
    constant: float,
    coefficient: Callable[[int], PolyValue],
    z: float,
    n_max: int,
    radius: Optional[float],
    settings: Settings,
) -> SeriesResult:
    """
    Partial sum with truncation control.

    Summing stops once a term drops below series_rel_cutoff times the
    partial sum, or after n_max terms. When the radius is unknown, a run
    of growing terms aborts the sum.
    """
    log_z = math.log(abs(z)) if z != 0.0 else -math.inf
    coeffs: list[PolyValue] = []
    terms = [constant]
    partial = constant
    previous: Optional[float] = None
    growing = 0
    converged = False
    estimate = 0.0

    for n in range(1, n_max + 2):
        coeff = coefficient(n)
        term = _term(coeff, n, log_z, z < 0.0)
        if n == n_max + 1:
            estimate = abs(term)
            break
        if coeff.value == 0.0 and z != 0.0:
            # a vanishing coefficient says nothing about convergence
            coeffs.append(coeff)
            continue
        if abs(term) <= settings.series_rel_cutoff * abs(partial):
            converged = True
            estimate = abs(term)
            break
        if radius is None and previous is not None and abs(term) > previous:
            growing += 1
            if growing >= settings.series_growth_patience:
                raise DivergingSeriesError(
                    message=f"{kind.value} series terms grow for {growing} consecutive orders",
                    details={"params": params, "argument": z, "order": n}
                )
        else:
            growing = 0
        previous = abs(term)
        coeffs.append(coeff)
        terms.append(term)
        partial = math.fsum(terms)

    if not converged:
        logger.warning(
            f"{kind.value} series truncated at {n_max} terms, first omitted term {estimate:.3e}"
        )
    else:
        logger.debug(f"{kind.value} series converged after {len(coeffs)} terms")

    expansion = SeriesExpansion(
        kind=kind, params=params, constant=constant, coeffs=tuple(coeffs),
        radius=radius, terms_used=len(coeffs), truncation_estimate=estimate,
        converged=converged,
    )
    return SeriesResult(value=partial, expansion=expansion)


def _check_order(n_max: int) -> None:
    if n_max < 1:
        raise DomainError(message="n_max must be at least 1", details={"n_max": n_max})


def series_one_up_one_low(
    t: float,
    s: float,
    a: float,
    n_max: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> SeriesResult:
    """
    Expand the solution of e^x (x - t) / (x - s) = a around a = 0, where x(0) = t.

    Args:
        t: Upper parameter
        s: Lower parameter
        a: Right-hand side
        n_max: Truncation order (settings.series_n_max by default)

    For t < s the reported radius is the smaller of radius_one_up_one_low
    and branch_point_radius_one_up_one_low.

    Raises:
        DegenerateInputError: If t = s
        ConvergenceDomainError: If t < s and |a| >= radius
        DivergingSeriesError: If t > s and the terms keep growing
    """
    settings = settings or get_settings()
    n_max = settings.series_n_max if n_max is None else n_max
    _check_order(n_max)
    if t == s:
        raise DegenerateInputError(message="t and s coincide", details={"t": t, "s": s})

    radius = None
    if t < s:
        radius = min(radius_one_up_one_low(t, s), branch_point_radius_one_up_one_low(t, s))
    if radius is not None and abs(a) >= radius:
        raise ConvergenceDomainError(
            message=f"|a| = {abs(a)} is not inside the radius of convergence",
            radius=radius,
            details={"t": t, "s": s, "a": a}
        )
    big_t = t - s
    return _sum_series(
        SeriesKind.ONE_UP_ONE_LOW, {"t": t, "s": s}, t,
        lambda n: _one_up_one_low_coefficient(t, big_t, n),
        a, n_max, radius, settings,
    )


def series_two_up(
    t1: float,
    t2: float,
    a: float,
    n_max: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> SeriesResult:
    """
    Expand the solution of e^x (x - t1)(x - t2) = a around a = 0, where x(0) = t1.

    Raises:
        DegenerateInputError: If t1 = t2
        DivergingSeriesError: If the terms keep growing
    """
    settings = settings or get_settings()
    n_max = settings.series_n_max if n_max is None else n_max
    _check_order(n_max)
    if t1 == t2:
        raise DegenerateInputError(message="t1 and t2 coincide", details={"t1": t1, "t2": t2})
    big_t = t2 - t1
    return _sum_series(
        SeriesKind.TWO_UP, {"t1": t1, "t2": t2}, t1,
        lambda n: _two_up_coefficient(t1, big_t, n),
        a, n_max, None, settings,
    )


def series_r_lambert(
    r: float,
    x: float,
    n_max: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> SeriesResult:
    """
    Expand W_r(x), the solution of w e^w + r w = x, around x = 0.

    Coefficients are exact rationals in 1 / (r + 1) rounded once.

    Raises:
        DegenerateInputError: If r = -1
        DivergingSeriesError: If the terms keep growing
    """
    settings = settings or get_settings()
    n_max = settings.series_n_max if n_max is None else n_max
    _check_order(n_max)
    if r == -1.0:
        raise DegenerateInputError(message="The r-Lambert series needs r != -1", details={"r": r})
    return _sum_series(
        SeriesKind.R_LAMBERT, {"r": r}, 0.0,
        lambda n: _r_lambert_coefficient(r, n),
        x, n_max, None, settings,
    )
