"""
The r-Lambert function W_r(n): real solutions of x e^x + r x = n.

The solver works on the defining equation directly, so r = 0 and n = 0
need no special treatment. Branches are the monotone pieces of
f(x) = x e^x + r x, indexed from left to right.
"""
import math
from typing import Optional

from genlambert.core.config import Settings, get_settings
from genlambert.core.exceptions import DomainError, InvalidBranchError
from genlambert.core.logging import get_logger
from genlambert.schemas.genw import SolutionRoot, SolutionSet
from genlambert.schemas.rlambert import AsymptoticDirection, BranchStructure, RLambertQuery
from genlambert.services.classicw import lambert_w0, lambert_wm1
from genlambert.services.roots import brent_root, expand_until

logger = get_logger(__name__)

# the double critical point at x = -2 appears at r = e^-2
DOUBLE_CRITICAL_R = math.exp(-2.0)


def f(r: float, x: float) -> float:
    """x e^x + r x, saturating to +-inf when e^x overflows."""
    try:
        return x * math.exp(x) + r * x
    except OverflowError:
        return math.copysign(math.inf, x)


def branch_structure(r: float) -> BranchStructure:
    """
    Critical points of f and the monotone intervals between them.

    e^x (x + 1) = -r has the solutions W(-r e) - 1: one for r < 0, the
    point -1 for r = 0, two for 0 < r < e^-2 and none beyond. At r = e^-2
    the pair merges into an inflection at -2 and f stays monotone.
    """
    if r < 0.0:
        critical: tuple[float, ...] = (lambert_w0(-r * math.e) - 1.0,)
    elif r == 0.0:
        critical = (-1.0,)
    elif r < DOUBLE_CRITICAL_R:
        left = lambert_wm1(-r * math.e) - 1.0
        right = lambert_w0(-r * math.e) - 1.0
        critical = (left, right) if left < right else ()
    else:
        critical = ()

    edges = (-math.inf,) + critical + (math.inf,)
    intervals = tuple(zip(edges[:-1], edges[1:]))
    logger.debug(f"r={r}: critical points {critical}")
    return BranchStructure(r=r, critical_points=critical, branch_intervals=intervals)


def principal_branch(structure: BranchStructure) -> int:
    """Index of the branch reaching +inf, continuous with W_0 as r -> 0."""
    return structure.branch_count - 1


def branch_containing(structure: BranchStructure, x: float) -> int:
    """Index of the monotone interval holding x; a critical point belongs to the lower branch."""
    for i, (_, hi) in enumerate(structure.branch_intervals):
        if x <= hi:
            return i
    return structure.branch_count - 1


def branch_image(structure: BranchStructure, branch: int) -> tuple[float, float]:
    """Limits of f at the left and right ends of a branch."""
    lo, hi = structure.branch_intervals[branch]
    r = structure.r
    if math.isinf(lo):
        # x e^x -> 0 and r x -> -inf * sign(r)
        f_lo = 0.0 if r == 0.0 else -math.copysign(math.inf, r)
    else:
        f_lo = f(r, lo)
    f_hi = math.inf if math.isinf(hi) else f(r, hi)
    return f_lo, f_hi


def _check_branch(structure: BranchStructure, branch: int) -> None:
    if not 0 <= branch < structure.branch_count:
        raise InvalidBranchError(
            message=f"r={structure.r} has {structure.branch_count} real branch(es)",
            details={"r": structure.r, "branch": branch, "branch_count": structure.branch_count}
        )


def _solve_on_branch(
    structure: BranchStructure, branch: int, n: float, settings: Settings
) -> Optional[float]:
    r = structure.r
    lo, hi = structure.branch_intervals[branch]
    f_lo, f_hi = branch_image(structure, branch)

    # a local extremum equal to n is reported on the lower branch
    if math.isfinite(hi) and f_hi == n:
        return hi
    if not min(f_lo, f_hi) < n < max(f_lo, f_hi):
        return None

    def sign_like(limit: float):
        above = limit > n
        return lambda x: f(r, x) == n or (f(r, x) > n) == above

    steps = settings.max_bracket_steps
    if math.isfinite(lo):
        left = lo
    else:
        left = expand_until(sign_like(f_lo), hi if math.isfinite(hi) else 0.0, -1.0, max_steps=steps)
    if math.isfinite(hi):
        right = hi
    else:
        right = expand_until(sign_like(f_hi), lo if math.isfinite(lo) else 0.0, 1.0, max_steps=steps)
    if left is None or right is None:
        logger.debug(f"No representable bracket for n={n} on branch {branch}")
        return None
    return brent_root(lambda x: f(r, x) - n, left, right, max_iter=settings.newton_max_iter)


def r_lambert(
    query: RLambertQuery,
    tol: Optional[float] = None,
    settings: Optional[Settings] = None,
) -> Optional[float]:
    """
    Solve x e^x + r x = n on one branch.

    Branches are numbered from the left, so the branch continuous with W_0
    is principal_branch(structure), the last one. At r = 0 that is branch 1,
    and branch 0 is the W_-1 piece on (-inf, -1].

    Args:
        query: r, right-hand side n and branch index
        tol: Relative residual tolerance

    Returns:
        The solution, or None when n lies outside the branch image

    Raises:
        InvalidBranchError: If the branch index does not exist for r
    """
    settings = settings or get_settings()
    tol = settings.default_tol if tol is None else tol
    structure = branch_structure(query.r)
    _check_branch(structure, query.branch)

    x = _solve_on_branch(structure, query.branch, query.n, settings)
    if x is not None:
        residual = abs(f(query.r, x) - query.n)
        if residual > tol * (1.0 + abs(query.n)):
            logger.warning(f"W_r residual {residual:.3e} above tolerance at x={x!r}")
    return x


def r_lambert_all(
    r: float,
    n: float,
    tol: Optional[float] = None,
    settings: Optional[Settings] = None,
) -> SolutionSet:
    """All real solutions of x e^x + r x = n, one per branch whose image holds n."""
    settings = settings or get_settings()
    tol = settings.default_tol if tol is None else tol
    structure = branch_structure(r)
    roots: list[SolutionRoot] = []
    for branch in range(structure.branch_count):
        x = _solve_on_branch(structure, branch, n, settings)
        if x is None or (roots and x <= roots[-1].x):
            continue
        roots.append(SolutionRoot(x=x, residual=abs(f(r, x) - n), branch_index=len(roots)))
    return SolutionSet(roots=tuple(roots), tol=tol)


def r_lambert_asymptotic(r: float, x: float, direction: AsymptoticDirection) -> float:
    """
    Leading asymptotics of W_r.

    plus-inf:  log x + log(1 / log x - r / x)
    minus-inf: x / r

    Raises:
        DomainError: x <= e or a non-positive log argument for plus-inf; r = 0 for minus-inf
    """
    direction = AsymptoticDirection(direction)
    if direction is AsymptoticDirection.MINUS_INF:
        if r == 0.0:
            raise DomainError(message="W_r ~ x / r needs r != 0", details={"r": r})
        return x / r

    if not x > math.e:
        raise DomainError(message="The +inf asymptotic form needs x > e", details={"x": x})
    log_x = math.log(x)
    correction = 1.0 / log_x - r / x
    if not correction > 0.0:
        raise DomainError(
            message="1/log(x) - r/x must be positive",
            details={"r": r, "x": x}
        )
    return log_x + math.log(correction)
