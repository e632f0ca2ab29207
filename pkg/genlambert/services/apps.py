"""
Physical problems that reduce to classical or generalized Lambert W values.
"""
import math
from typing import Optional

from genlambert.core.config import Settings, get_settings
from genlambert.core.exceptions import DomainError
from genlambert.core.logging import get_logger
from genlambert.schemas.apps import (
    STANDARD_GRAVITY,
    Dde2Params,
    Dde2Result,
    DispersionParams,
    DispersionResult,
    DoubleWellLevels,
    DoubleWellParams,
)
from genlambert.schemas.genw import GenWParams, RationalExpEquation, SolutionRoot, SolutionSet
from genlambert.services.classicw import lambert_w0
from genlambert.services.genw import GenWSolver, backmap, canonicalize
from genlambert.services.roots import newton_bisect

logger = get_logger(__name__)


# Double-well Dirac delta model

def double_well_levels(params: DoubleWellParams) -> DoubleWellLevels:
    """
    Decay constants d = q (1 +- e^{-d R}) and energies E = -d^2 / 2.

    d+- = q + W_0(+-q R e^{-q R}) / R. The argument of the minus level never
    drops below -1/e because u e^{-u} <= 1/e.
    """
    q, big_r = params.q, params.R
    argument = q * big_r * math.exp(-q * big_r)
    d_plus = q + lambert_w0(argument) / big_r
    d_minus = q + lambert_w0(-argument) / big_r
    return DoubleWellLevels(
        d_plus=d_plus,
        d_minus=d_minus,
        e_plus=-0.5 * d_plus * d_plus,
        e_minus=-0.5 * d_minus * d_minus,
    )


# e^{-c x} = a0 (x - t1)(x - t2)

def solve_quadratic_exp(
    c: float,
    a0: float,
    t1: float,
    t2: float,
    tol: Optional[float] = None,
    settings: Optional[Settings] = None,
) -> SolutionSet:
    """
    All real solutions of e^{-c x} = a0 (x - t1)(x - t2).

    Solved as X = c x in W(c t1, c t2;; c^2 / a0) and mapped back with x = X / c.
    Residuals refer to the original equation.
    """
    equation = RationalExpEquation(c=c, a0=a0, upper_raw=(t1, t2))
    form = canonicalize(equation)
    canonical = GenWSolver(settings).solve_all(form.params, tol=tol)
    return backmap(canonical, equation)


# Delay differential equation (l - t1)(l - t2) = b1 e^{-l tau} (l - s1)

def characteristic_residual(params: Dde2Params, lam: float) -> float:
    """|(l - t1)(l - t2) - b1 e^{-l tau} (l - s1)|."""
    try:
        delayed = params.b1 * math.exp(-lam * params.tau) * (lam - params.s1)
    except OverflowError:
        return math.inf
    return abs((lam - params.t1) * (lam - params.t2) - delayed)


def dde2_real_roots(
    params: Dde2Params,
    tol: Optional[float] = None,
    settings: Optional[Settings] = None,
) -> Dde2Result:
    """
    Real characteristic roots of a second-order delay equation.

    With x = l tau the equation reads e^x (x - tau t1)(x - tau t2) / (x - tau s1) = b1 tau.
    A lower root equal to an upper root cancels; the shared value is itself
    a root of the original equation and is reported in ``common_roots``.
    The stability verdict only looks at the real spectrum.
    """
    settings = settings or get_settings()
    tol = settings.default_tol if tol is None else tol
    tau = params.tau

    if params.b1 == 0.0:
        values = sorted({params.t1, params.t2})
        roots = tuple(SolutionRoot(x=v, residual=0.0, branch_index=i) for i, v in enumerate(values))
        return _dde2_result(SolutionSet(roots=roots, tol=tol), ())

    upper = [params.t1, params.t2]
    lower = [params.s1]
    common: tuple[float, ...] = ()
    if params.s1 in upper:
        upper.remove(params.s1)
        lower = []
        common = (params.s1,)
        logger.debug(f"Cancelled the shared factor (l - {params.s1})")

    canonical = GenWParams(
        upper=tuple(tau * t for t in upper),
        lower=tuple(tau * s for s in lower),
        a=params.b1 * tau,
    )
    solved = GenWSolver(settings).solve_all(canonical, tol=tol)

    found = {root.x / tau: root for root in solved.roots}
    for value in common:
        found.setdefault(value, None)
    roots = []
    for i, lam in enumerate(sorted(found)):
        source = found[lam]
        roots.append(SolutionRoot(
            x=lam,
            residual=characteristic_residual(params, lam),
            branch_index=i,
            multiplicity=source.multiplicity if source is not None else 1,
            ill_conditioned=source.ill_conditioned if source is not None else False,
        ))
    solutions = SolutionSet(
        roots=tuple(roots), tol=tol,
        xmin=solved.xmin / tau, xmax=solved.xmax / tau, explicit_domain=False,
    )
    return _dde2_result(solutions, common)


def _dde2_result(solutions: SolutionSet, common: tuple[float, ...]) -> Dde2Result:
    if not solutions.roots:
        return Dde2Result(solutions=solutions, common_roots=common)
    rightmost = solutions.roots[-1].x
    sign = (rightmost > 0.0) - (rightmost < 0.0)
    return Dde2Result(
        solutions=solutions,
        common_roots=common,
        rightmost=rightmost,
        rightmost_sign=sign,
        real_spectrum_stable=rightmost < 0.0,
    )


# Water-wave dispersion

def _newton_polish(func, x: float, steps: int = 6) -> float:
    for _ in range(steps):
        value, slope = func(x)
        if slope == 0.0 or not math.isfinite(slope):
            break
        step = value / slope
        x -= step
        if abs(step) <= 2e-16 * abs(x):
            break
    return x


def _largest_root(solutions: SolutionSet, default: float) -> float:
    return solutions.roots[-1].x if solutions.roots else default


def solve_single_layer(y: float, settings: Optional[Settings] = None) -> float:
    """
    Positive root of x tanh(x) = y.

    With u = 2x the relation is e^u (u - 2y) / (u + 2y) = 1, a generalized
    W value; deep water (y above the threshold) has x = y to double precision.
    """
    settings = settings or get_settings()
    if not y > 0.0:
        raise DomainError(message="y must be positive", details={"y": y})
    if y > settings.deep_water_threshold:
        return y
    params = GenWParams(upper=(2.0 * y,), lower=(-2.0 * y,), a=1.0)
    x = 0.5 * _largest_root(GenWSolver(settings).solve_all(params), 2.0 * max(y, math.sqrt(y)))

    def residual(v: float) -> tuple[float, float]:
        th = math.tanh(v)
        return v * th - y, th + v * (1.0 - th * th)
    return _newton_polish(residual, x)


def solve_two_layer(
    y: float, rho1: float, rho2: float, settings: Optional[Settings] = None
) -> float:
    """
    Positive root of y = x tanh(x) (rho1 - rho2) / (rho1 + rho2 tanh(x)).

    Uses e^{2x} = (x + y) / (x - c y) with c = (rho1 + rho2) / (rho1 - rho2).

    Raises:
        DomainError: If rho1 <= rho2
    """
    settings = settings or get_settings()
    if not rho1 > rho2:
        raise DomainError(
            message="Two-layer dispersion needs rho1 > rho2",
            details={"rho1": rho1, "rho2": rho2}
        )
    if not y > 0.0:
        raise DomainError(message="y must be positive", details={"y": y})
    c = (rho1 + rho2) / (rho1 - rho2)
    if c * y > settings.deep_water_threshold:
        return c * y
    params = GenWParams(upper=(2.0 * c * y,), lower=(-2.0 * y,), a=1.0)
    x = 0.5 * _largest_root(GenWSolver(settings).solve_all(params), 2.0 * c * y + 1.0)
    drho = rho1 - rho2

    def residual(v: float) -> tuple[float, float]:
        th = math.tanh(v)
        dth = 1.0 - th * th
        num, dnum = v * th, th + v * dth
        den, dden = rho1 + rho2 * th, rho2 * dth
        return drho * num / den - y, drho * (dnum * den - num * dden) / (den * den)
    return _newton_polish(residual, x)


def invert_dispersion(
    params: DispersionParams, settings: Optional[Settings] = None
) -> DispersionResult:
    """
    Wavenumber k from w^2 = g k tanh(k h), or from the two-layer relation when rho2 > 0.

    Returns:
        k together with x = k h and y = w^2 h / g
    """
    y = params.omega ** 2 * params.h / params.g
    if params.two_layer:
        x = solve_two_layer(y, params.rho1, params.rho2, settings)
    else:
        x = solve_single_layer(y, settings)
    logger.debug(f"Dispersion y={y!r} -> x={x!r}")
    return DispersionResult(k=x / params.h, x=x, y=y, two_layer=params.two_layer)


def frequency_from_wavenumber(
    k: float,
    h: float,
    g: float = STANDARD_GRAVITY,
    rho1: float = 1000.0,
    rho2: float = 0.0,
) -> float:
    """Forward dispersion relation: w for a given wavenumber."""
    th = math.tanh(k * h)
    if rho2 > 0.0:
        return math.sqrt(g * k * th * (rho1 - rho2) / (rho1 + rho2 * th))
    return math.sqrt(g * k * th)


# Langevin function

def langevin(x: float, settings: Optional[Settings] = None) -> float:
    """L(x) = coth(x) - 1/x, with the Taylor series near the removable singularity."""
    settings = settings or get_settings()
    if abs(x) < settings.langevin_series_cutoff:
        x2 = x * x
        return x * (1.0 / 3.0 - x2 * (1.0 / 45.0 - x2 * 2.0 / 945.0))
    return 1.0 / math.tanh(x) - 1.0 / x


def langevin_derivative(x: float, settings: Optional[Settings] = None) -> float:
    """L'(x) = 1/x^2 - 1/sinh(x)^2."""
    settings = settings or get_settings()
    if abs(x) < settings.langevin_series_cutoff:
        x2 = x * x
        return 1.0 / 3.0 - x2 * (1.0 / 15.0 - x2 * 2.0 / 189.0)
    try:
        sh = math.sinh(x)
    except OverflowError:
        return 1.0 / (x * x)
    return 1.0 / (x * x) - 1.0 / (sh * sh)


def _check_langevin_range(a: float) -> None:
    if not -1.0 < a < 1.0:
        raise DomainError(message="The Langevin function takes values in (-1, 1)", details={"a": a})


def _solve_langevin(b: float, x0: Optional[float], settings: Settings) -> float:
    # L(x) <= x / 3 and L(x) > 1 - 1/x bracket the root by [3b, 1 / (1 - b)]
    return newton_bisect(
        lambda x: (langevin(x, settings) - b, langevin_derivative(x, settings)),
        3.0 * b, 1.0 / (1.0 - b), x0=x0, max_iter=settings.newton_max_iter,
    )


def inverse_langevin_direct(a: float, settings: Optional[Settings] = None) -> float:
    """L^{-1}(a) by safeguarded Newton on L itself."""
    settings = settings or get_settings()
    _check_langevin_range(a)
    if a == 0.0:
        return 0.0
    return math.copysign(_solve_langevin(abs(a), None, settings), a)


def inverse_langevin(a: float, settings: Optional[Settings] = None) -> float:
    """
    Inverse Langevin function through the generalized W reduction.

    With X = -2x, L(x) = a becomes
    e^X (X - 2/(a+1)) / (X - 2/(a-1)) = (a-1)/(a+1),
    whose root X = 0 is spurious. For a > 0 the wanted root is the negative
    one and L^{-1}(a) = -X/2, polished by at most two Newton steps on L.
    Odd symmetry is exact because only |a| is solved. Below
    settings.langevin_direct_cutoff the two roots are too close to separate
    and L is inverted directly.

    Raises:
        DomainError: If |a| >= 1
    """
    settings = settings or get_settings()
    _check_langevin_range(a)
    if a == 0.0:
        return 0.0
    b = abs(a)
    if b < settings.langevin_direct_cutoff:
        return math.copysign(_solve_langevin(b, None, settings), a)

    params = GenWParams(upper=(2.0 / (b + 1.0),), lower=(2.0 / (b - 1.0),), a=(b - 1.0) / (b + 1.0))
    solutions = GenWSolver(settings).solve_all(params)
    negative = [root.x for root in solutions.roots if root.x < 0.0]
    if not negative:
        # the root sits closer to the pole than double precision resolves
        logger.debug(f"Generalized W root for a={a!r} merged with its pole")
        return math.copysign(_solve_langevin(b, None, settings), a)

    reduced = -0.5 * negative[0]
    x = reduced
    for _ in range(2):
        slope = langevin_derivative(x, settings)
        if slope <= 0.0:
            break
        x -= (langevin(x, settings) - b) / slope
    if abs(x - reduced) > 1e-8 * (1.0 + x):
        logger.warning(
            f"Newton polish moved the reduced root for a={a!r} from {reduced!r} to {x!r}"
        )
    return math.copysign(x, a)
