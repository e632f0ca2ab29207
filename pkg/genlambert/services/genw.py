"""
Generalized Lambert W: every real solution of e^x P(x) / Q(x) = a,
with P(x) = prod(x - t_i) and Q(x) = prod(x - s_j).

The real line is cut at the zeros t_i, the poles s_j and the critical
points of F(x) = e^x P(x) / Q(x). On each piece F keeps its sign and is
monotone, so log|F| runs monotonically between its limits at the two
ends and a root exists exactly when log|a| lies strictly between them.
Roots are polished by safeguarded Newton on log|F| - log|a|.
"""
import math
from collections import Counter
from typing import Callable, NamedTuple, Optional

from numpy.polynomial import polynomial as npoly

from genlambert.core.config import Settings, get_settings
from genlambert.core.exceptions import DegenerateInputError, DomainError
from genlambert.core.logging import LoggerMixin
from genlambert.schemas.genw import (
    BracketInfo,
    CanonicalForm,
    ClosedForm,
    ClosedFormKind,
    GenWParams,
    RationalExpEquation,
    SolutionRoot,
    SolutionSet,
)
from genlambert.services.classicw import real_branches
from genlambert.services.roots import EPS, approach_until, brent_root, expand_until

IMAG_TOL = 1e-6
MERGE_TOL = 1e-12
POLISH_STEPS = 8

MINUS_INF = "minus-inf"
PLUS_INF = "plus-inf"
ZERO = "zero"
POLE = "pole"
CRITICAL = "critical"


class Landmark(NamedTuple):
    """A point where the monotone behaviour of F may change."""

    x: float
    kind: str


def log_abs(params: GenWParams, x: float) -> float:
    """log|F(x)| = x + sum log|x - t_i| - sum log|x - s_j|."""
    terms = [x]
    for t in params.upper:
        if x == t:
            return -math.inf
        terms.append(math.log(abs(x - t)))
    for s in params.lower:
        if x == s:
            return math.inf
        terms.append(-math.log(abs(x - s)))
    return math.fsum(terms)


def log_derivative(params: GenWParams, x: float) -> float:
    """F'(x) / F(x)."""
    return (
        1.0
        + math.fsum(1.0 / (x - t) for t in params.upper)
        - math.fsum(1.0 / (x - s) for s in params.lower)
    )


def sign_at(params: GenWParams, x: float) -> int:
    """Sign of F away from its zeros and poles."""
    negatives = sum(1 for t in params.upper if x < t) + sum(1 for s in params.lower if x < s)
    return -1 if negatives % 2 else 1


def evaluate(params: GenWParams, x: float) -> float:
    """
    F(x), switching to sign * exp(log|F|) when the direct product
    overflows or underflows.

    Raises:
        DomainError: If x is a pole
    """
    if x in params.lower:
        raise DomainError(message="F has a pole here", details={"x": x})
    if x in params.upper:
        return 0.0
    try:
        value = math.exp(x) * math.prod(x - t for t in params.upper) / math.prod(x - s for s in params.lower)
        if math.isfinite(value) and value != 0.0:
            return value
    except OverflowError:
        pass
    try:
        return sign_at(params, x) * math.exp(log_abs(params, x))
    except OverflowError:
        return math.copysign(math.inf, sign_at(params, x))


def _polish(coeffs, deriv, x: float) -> float:
    for _ in range(POLISH_STEPS):
        slope = float(npoly.polyval(x, deriv))
        if slope == 0.0:
            break
        step = float(npoly.polyval(x, coeffs)) / slope
        if not math.isfinite(x - step):
            break
        x -= step
        if abs(step) <= 4 * EPS * (1.0 + abs(x)):
            break
    return x


def critical_points(params: GenWParams) -> list[float]:
    """
    Real critical points of F in ascending order.

    These are the real roots of D = P Q + P' Q - P Q'. Repeated parameters
    contribute factors of D sitting on the parameters themselves, so the
    polynomial actually rooted is N = Pi * F'/F with Pi the product over
    distinct parameter values, whose roots are exactly the critical points.
    """
    upper = Counter(params.upper)
    lower = Counter(params.lower)
    distinct = sorted(set(upper) | set(lower))
    if not distinct:
        return []

    numerator = npoly.polyfromroots(distinct)
    for value in distinct:
        weight = upper.get(value, 0) - lower.get(value, 0)
        if weight:
            others = npoly.polyfromroots([v for v in distinct if v != value])
            numerator = npoly.polyadd(numerator, weight * others)
    deriv = npoly.polyder(numerator)

    found: list[float] = []
    for z in npoly.polyroots(numerator):
        if abs(z.imag) > IMAG_TOL * (1.0 + abs(z)):
            continue
        x = _polish(numerator, deriv, float(z.real))
        if any(abs(x - v) <= MERGE_TOL * (1.0 + abs(x)) for v in distinct):
            continue
        if any(abs(x - c) <= MERGE_TOL * (1.0 + abs(x)) for c in found):
            continue
        found.append(x)
    return sorted(found)


class GenWSolver(LoggerMixin):
    """Enumerates the real solutions of e^x P(x) / Q(x) = a."""

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or get_settings()

    def solve_all(
        self,
        params: GenWParams,
        tol: Optional[float] = None,
        xmin: Optional[float] = None,
        xmax: Optional[float] = None,
    ) -> SolutionSet:
        """
        Find every real solution.

        Args:
            params: Upper/lower parameters and right-hand side
            tol: Relative residual tolerance, |F(x) - a| <= tol * (1 + |a|)
            xmin: Optional left end of the search domain
            xmax: Optional right end of the search domain

        Returns:
            Ascending solutions; an empty set when none exist

        Raises:
            DomainError: Both parameter lists empty with a <= 0, or a bad tolerance/domain
            DegenerateInputError: A value appears in both parameter lists
        """
        tol = self.settings.default_tol if tol is None else tol
        if not tol > 0.0:
            raise DomainError(message="Tolerance must be positive", details={"tol": tol})
        if xmin is not None and xmax is not None and not xmin < xmax:
            raise DomainError(message="Search domain is empty", details={"xmin": xmin, "xmax": xmax})
        self._validate(params)

        if params.a == 0.0:
            candidates = sorted(Counter(params.upper).items())
            brackets: list[BracketInfo] = []
        else:
            candidates, brackets = self._scan(params, tol)
        return self._assemble(params, candidates, brackets, tol, xmin, xmax)

    def _validate(self, params: GenWParams) -> None:
        if not params.upper and not params.lower and params.a <= 0.0:
            raise DomainError(
                message="e^x = a has no real solution for a <= 0",
                details={"a": params.a}
            )
        shared = params.shared_values
        if shared:
            raise DegenerateInputError(
                message="Upper and lower parameters share a value; cancel the common factor first",
                details={"shared": shared}
            )

    def _landmarks(self, params: GenWParams) -> list[Landmark]:
        marks = [Landmark(t, ZERO) for t in set(params.upper)]
        marks += [Landmark(s, POLE) for s in set(params.lower)]
        marks += [Landmark(c, CRITICAL) for c in critical_points(params)]
        return sorted(marks)

    def _limit(self, params: GenWParams, mark: Landmark) -> float:
        """Limit of log|F| when approaching the landmark."""
        if mark.kind in (MINUS_INF, ZERO):
            return -math.inf
        if mark.kind in (PLUS_INF, POLE):
            return math.inf
        return log_abs(params, mark.x)

    def _scan(
        self, params: GenWParams, tol: float
    ) -> tuple[list[tuple[float, int]], list[BracketInfo]]:
        a = params.a
        target = math.log(abs(a))
        wanted_sign = 1 if a > 0.0 else -1
        landmarks = self._landmarks(params)
        edges = [Landmark(-math.inf, MINUS_INF)] + landmarks + [Landmark(math.inf, PLUS_INF)]
        limits = [self._limit(params, mark) for mark in edges]
        self.logger.debug(f"Landmarks for {params.upper}/{params.lower}: {landmarks}")

        found: list[tuple[float, int]] = []
        report: list[BracketInfo] = []
        for i in range(len(edges) - 1):
            left, right = edges[i], edges[i + 1]
            lim_lo, lim_hi = limits[i], limits[i + 1]
            sign = sign_at(params, _interior_point(left.x, right.x))
            root = None
            if sign == wanted_sign and min(lim_lo, lim_hi) < target < max(lim_lo, lim_hi):
                root = self._solve_segment(params, left, right, target, lim_lo, lim_hi)
                if root is not None:
                    found.append((root, 1))
            report.append(BracketInfo(
                lo=left.x, hi=right.x, sign=sign,
                log_abs_lo=lim_lo, log_abs_hi=lim_hi, contains_root=root is not None,
            ))

        # tangential roots sit on critical points and produce no sign change
        bound = tol * (1.0 + abs(a))
        for i, mark in enumerate(edges):
            if mark.kind != CRITICAL:
                continue
            value = evaluate(params, mark.x)
            if (value > 0.0) != (a > 0.0) or abs(value - a) > bound:
                continue
            extremum = (limits[i - 1] - limits[i]) * (limits[i + 1] - limits[i]) > 0.0
            radius = 10.0 * math.sqrt(tol) * (1.0 + abs(mark.x))
            found = [(x, m) for x, m in found if abs(x - mark.x) > radius]
            found.append((mark.x, 2 if extremum else 1))
            self.logger.debug(f"Tangential root at critical point {mark.x}")
        return found, report

    def _solve_segment(
        self,
        params: GenWParams,
        left: Landmark,
        right: Landmark,
        target: float,
        lim_lo: float,
        lim_hi: float,
    ) -> Optional[float]:
        def excess(x: float) -> float:
            return log_abs(params, x) - target

        def sign_like(limit: float) -> Callable[[float], bool]:
            above = limit > target

            def predicate(x: float) -> bool:
                value = excess(x)
                return value == 0.0 or (value > 0.0) == above
            return predicate

        lo = self._bracket_end(left, right, sign_like(lim_lo), inward=1.0)
        hi = self._bracket_end(right, left, sign_like(lim_hi), inward=-1.0)
        if lo is None or hi is None:
            self.logger.debug(f"Root on ({left.x}, {right.x}) is not resolvable in double precision")
            return None
        return brent_root(excess, lo, hi, max_iter=self.settings.newton_max_iter)

    def _bracket_end(
        self,
        mark: Landmark,
        other: Landmark,
        predicate: Callable[[float], bool],
        inward: float,
    ) -> Optional[float]:
        if mark.kind == CRITICAL:
            return mark.x
        steps = self.settings.max_bracket_steps
        if mark.kind in (ZERO, POLE):
            width = 0.5 * abs(other.x - mark.x) if math.isfinite(other.x) else 1.0
            return approach_until(predicate, mark.x, inward, width, max_steps=steps)
        anchor = other.x if math.isfinite(other.x) else 0.0
        return expand_until(predicate, anchor, -inward, max_steps=steps)

    def _assemble(
        self,
        params: GenWParams,
        candidates: list[tuple[float, int]],
        brackets: list[BracketInfo],
        tol: float,
        xmin: Optional[float],
        xmax: Optional[float],
    ) -> SolutionSet:
        explicit = xmin is not None or xmax is not None
        values = list(params.upper) + list(params.lower)
        margin = self.settings.search_margin
        lo = min(values, default=0.0) - margin
        hi = max(values, default=0.0) + margin
        if xmin is not None:
            lo = xmin
        if xmax is not None:
            hi = xmax

        roots: list[SolutionRoot] = []
        for x, multiplicity in sorted(candidates):
            if explicit and not lo <= x <= hi:
                continue
            if roots and x <= roots[-1].x:
                continue
            x, residual, ill = self._check_residual(params, x, tol, multiplicity)
            roots.append(SolutionRoot(
                x=x, residual=residual, branch_index=len(roots),
                multiplicity=multiplicity, ill_conditioned=ill,
            ))
        if not explicit and roots:
            lo = min(lo, roots[0].x)
            hi = max(hi, roots[-1].x)

        self.logger.debug(f"Found {len(roots)} real solution(s) for a={params.a}")
        return SolutionSet(
            roots=tuple(roots), bracket_report=tuple(brackets), tol=tol,
            xmin=lo, xmax=hi, explicit_domain=explicit,
        )

    def _check_residual(
        self, params: GenWParams, x: float, tol: float, multiplicity: int
    ) -> tuple[float, float, bool]:
        a = params.a
        bound = tol * (1.0 + abs(a))
        residual = abs(evaluate(params, x) - a)
        if residual <= bound or a == 0.0:
            return x, residual, False

        if multiplicity == 1:
            slope = evaluate(params, x) * log_derivative(params, x)
            if slope != 0.0 and math.isfinite(slope):
                polished = x - (evaluate(params, x) - a) / slope
                if abs(polished - x) <= 1e-8 * (1.0 + abs(x)):
                    polished_residual = abs(evaluate(params, polished) - a)
                    if polished_residual < residual:
                        x, residual = polished, polished_residual
            if residual <= bound:
                return x, residual, False

        noise = 4.0 * (
            abs(a * log_derivative(params, x)) * math.ulp(x)
            + abs(a) * EPS * (len(params.upper) + len(params.lower) + abs(x) + 2.0)
        )
        if residual <= noise:
            self.logger.warning(f"Root {x!r} is ill-conditioned: residual {residual:.3e} is at rounding level")
            return x, residual, True
        self.logger.warning(f"Root {x!r} has residual {residual:.3e} above the tolerance {bound:.3e}")
        return x, residual, False


def _interior_point(lo: float, hi: float) -> float:
    if math.isinf(lo) and math.isinf(hi):
        return 0.0
    if math.isinf(lo):
        return hi - 1.0
    if math.isinf(hi):
        return lo + 1.0
    return 0.5 * (lo + hi)


def solve_all(
    params: GenWParams,
    tol: Optional[float] = None,
    xmin: Optional[float] = None,
    xmax: Optional[float] = None,
    settings: Optional[Settings] = None,
) -> SolutionSet:
    """Convenience wrapper around GenWSolver.solve_all."""
    return GenWSolver(settings).solve_all(params, tol=tol, xmin=xmin, xmax=xmax)


def _real_count(argument: float) -> int:
    if argument < -math.exp(-1.0):
        return 0
    if argument == -math.exp(-1.0) or argument >= 0.0:
        return 1
    return 2


def reduce_special(params: GenWParams) -> Optional[ClosedForm]:
    """
    Closed form for the parameter counts (0, 0), (1, 0) and (0, 1).

    W(;;a) = log a, W(t;;a) = t + W(a e^-t) and W(;s;a) = s - W(-e^s / a).

    Returns:
        The descriptor, or None when no single-W form applies
    """
    a = params.a
    counts = (len(params.upper), len(params.lower))
    if counts == (0, 0):
        return ClosedForm(kind=ClosedFormKind.LOG, argument=a, multiplicity=1 if a > 0.0 else 0)
    if counts == (1, 0):
        t = params.upper[0]
        argument = a * math.exp(-t)
        return ClosedForm(
            kind=ClosedFormKind.UPPER_SHIFT, shift=t, argument=argument,
            multiplicity=_real_count(argument),
        )
    if counts == (0, 1):
        s = params.lower[0]
        if a == 0.0:
            return ClosedForm(kind=ClosedFormKind.LOWER_SHIFT, shift=s, argument=-math.inf, multiplicity=0)
        argument = -math.exp(s) / a
        return ClosedForm(
            kind=ClosedFormKind.LOWER_SHIFT, shift=s, argument=argument,
            multiplicity=_real_count(argument),
        )
    return None


def evaluate_closed_form(form: ClosedForm) -> list[float]:
    """Real values of a closed form in ascending order, one per real W branch."""
    if form.multiplicity == 0:
        return []
    if form.kind is ClosedFormKind.LOG:
        return [math.log(form.argument)]
    branches = real_branches(form.argument)
    if form.kind is ClosedFormKind.UPPER_SHIFT:
        return [form.shift + w for w in branches]
    return [form.shift - w for w in reversed(branches)]


def canonicalize(equation: RationalExpEquation) -> CanonicalForm:
    """
    Rewrite e^{-c x} = a0 prod(x - t_i) / prod(x - s_j) in canonical form.

    With X = c x the equation becomes e^X prod(X - c t_i) / prod(X - c s_j) = c^(n-m) / a0.

    Raises:
        DegenerateInputError: If the scaled lists share a value
    """
    c = equation.c
    upper = tuple(c * t for t in equation.upper_raw)
    lower = tuple(c * s for s in equation.lower_raw)
    degree = len(upper) - len(lower)
    params = GenWParams(upper=upper, lower=lower, a=c ** degree / equation.a0)
    if params.shared_values:
        raise DegenerateInputError(
            message="Upper and lower parameters share a value",
            details={"shared": params.shared_values}
        )
    return CanonicalForm(params=params, scale=c)


def raw_residual(equation: RationalExpEquation, x: float) -> float:
    """|e^{-c x} - a0 prod(x - t_i) / prod(x - s_j)|."""
    try:
        lhs = math.exp(-equation.c * x)
    except OverflowError:
        return math.inf
    rhs = (
        equation.a0
        * math.prod(x - t for t in equation.upper_raw)
        / math.prod(x - s for s in equation.lower_raw)
    )
    return abs(lhs - rhs)


def backmap(solutions: SolutionSet, equation: RationalExpEquation) -> SolutionSet:
    """
    Map canonical solutions X back to x = X / c, re-sorted and re-indexed.

    Residuals are recomputed against the raw equation.
    """
    c = equation.c
    mapped = sorted(((root.x / c, root) for root in solutions.roots), key=lambda pair: pair[0])
    roots = tuple(
        SolutionRoot(
            x=x, residual=raw_residual(equation, x), branch_index=i,
            multiplicity=root.multiplicity, ill_conditioned=root.ill_conditioned,
        )
        for i, (x, root) in enumerate(mapped)
    )
    brackets = []
    for info in solutions.bracket_report:
        ends = (info.lo / c, info.hi / c)
        logs = (info.log_abs_lo, info.log_abs_hi) if c > 0.0 else (info.log_abs_hi, info.log_abs_lo)
        brackets.append(info.model_copy(update={
            "lo": min(ends), "hi": max(ends), "log_abs_lo": logs[0], "log_abs_hi": logs[1],
        }))
    lo, hi = sorted((solutions.xmin / c, solutions.xmax / c))
    return SolutionSet(
        roots=roots, bracket_report=tuple(brackets), tol=solutions.tol,
        xmin=lo, xmax=hi, explicit_domain=solutions.explicit_domain,
    )
