"""
Pytest configuration and fixtures.
"""
import numpy as np
import pytest
from numpy.polynomial import polynomial as npoly

from genlambert.core.config import Settings
from genlambert.main import app
from genlambert.schemas.genw import GenWParams

# Oracle grid used by the brute-force sign scans
GRID_LO = -50.0
GRID_HI = 50.0
GRID_POINTS = 1_000_000


def _bisect(func, lo: float, hi: float) -> float:
    f_lo = func(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        f_mid = func(mid)
        if (f_mid > 0.0) == (f_lo > 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def scan_roots(func, lo: float, hi: float, points: int = GRID_POINTS) -> list[float]:
    """Sign changes of a vectorised function on a uniform grid, refined by bisection."""
    xs = np.linspace(lo, hi, points)
    with np.errstate(over="ignore", invalid="ignore"):
        ys = func(xs)
    signs = np.sign(ys)
    changes = np.nonzero(signs[:-1] * signs[1:] < 0)[0]

    def scalar(x: float) -> float:
        with np.errstate(over="ignore", invalid="ignore"):
            return float(func(np.float64(x)))
    return [_bisect(scalar, float(xs[i]), float(xs[i + 1])) for i in changes]


def cleared_genw(params: GenWParams):
    """g(x) = e^x P(x) - a Q(x): same real zeros as F(x) - a, and no poles."""
    p = npoly.polyfromroots(params.upper) if params.upper else np.array([1.0])
    q = npoly.polyfromroots(params.lower) if params.lower else np.array([1.0])
    return lambda x: np.exp(x) * npoly.polyval(x, p) - params.a * npoly.polyval(x, q)


@pytest.fixture
def settings():
    """Default settings, built fresh for every test."""
    return Settings()


@pytest.fixture
def rng():
    """Seeded generator for the randomised checks."""
    return np.random.default_rng(20240611)


@pytest.fixture
def grid_roots():
    """Brute-force root finder over a dense grid."""
    return scan_roots


@pytest.fixture
def genw_oracle():
    """Roots of F(x) = a on [lo, hi] found by scanning the cleared equation."""
    def oracle(params: GenWParams, lo: float = GRID_LO, hi: float = GRID_HI,
               points: int = GRID_POINTS) -> list[float]:
        return scan_roots(cleared_genw(params), lo, hi, points)
    return oracle


@pytest.fixture
def cli_app():
    """The Typer application."""
    return app
