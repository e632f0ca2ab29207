"""
Unit tests for the Taylor expansions.
"""
import math

import numpy as np
import pytest

from genlambert.core.config import Settings
from genlambert.core.exceptions import (
    ConvergenceDomainError,
    DegenerateInputError,
    DivergingSeriesError,
    DomainError,
)
from genlambert.schemas.genw import GenWParams
from genlambert.schemas.rlambert import RLambertQuery
from genlambert.schemas.series import SeriesKind
from genlambert.services.classicw import lambert_w0
from genlambert.services.genw import solve_all
from genlambert.services.rlambert import branch_structure, principal_branch, r_lambert
from genlambert.services.series import (
    branch_point_radius_one_up_one_low,
    estimate_radius_one_up_one_low,
    one_up_one_low_coefficients,
    r_lambert_coefficients,
    radius_one_up_one_low,
    series_one_up_one_low,
    series_r_lambert,
    series_two_up,
    two_up_coefficients,
)


def _nearest(values: list[float], target: float) -> float:
    return min(values, key=lambda x: abs(x - target))


class TestRadius:
    """Test the radius of convergence of the one-up-one-low series."""

    @pytest.mark.parametrize("t,s,expected", [
        (0.0, 1.0, math.exp(-1.5)),
        (0.0, 4.0, math.exp(-2.0)),
        (-1.0, 3.0, math.exp(-3.0)),
    ])
    def test_formula(self, t, s, expected):
        """Test e^{(t+s)/2 - 2 sqrt(s - t)}."""
        assert radius_one_up_one_low(t, s) == pytest.approx(expected, rel=1e-15)

    def test_close_parameters(self):
        """Test s -> t gives e^t."""
        assert radius_one_up_one_low(-1.0, -1.0 + 1e-12) == pytest.approx(math.exp(-1.0), rel=1e-5)

    @pytest.mark.parametrize("t,s", [(1.0, 1.0), (2.0, 1.0)])
    def test_requires_t_below_s(self, t, s):
        """Test t >= s raises DomainError."""
        with pytest.raises(DomainError):
            radius_one_up_one_low(t, s)

    def test_branch_point_is_critical_value(self):
        """Test the branch-point radius equals F at the left critical point."""
        c = (1.0 - math.sqrt(5.0)) / 2.0
        expected = math.exp(c) * c / (c - 1.0)
        assert branch_point_radius_one_up_one_low(0.0, 1.0) == pytest.approx(expected, rel=1e-14)

    @pytest.mark.parametrize("t,s", [(0.0, 1.0), (-1.0, 2.0), (1.0, 3.0), (0.0, 0.1)])
    def test_branch_point_inside_formula(self, t, s):
        """Test the branch point never lies beyond the closed-form radius."""
        assert branch_point_radius_one_up_one_low(t, s) <= radius_one_up_one_low(t, s)

    @pytest.mark.parametrize("t,s", [(0.0, 1.0), (-1.0, 2.0), (1.0, 3.0)])
    def test_coefficient_ratio_tends_to_branch_point(self, t, s):
        """Test |c_n / c_{n+1}| at n = 300 approaches the branch-point radius."""
        estimate = estimate_radius_one_up_one_low(t, s, 300)
        assert estimate == pytest.approx(branch_point_radius_one_up_one_low(t, s), rel=0.02)

    def test_ratio_needs_positive_order(self):
        """Test n = 0 raises DomainError."""
        with pytest.raises(DomainError):
            estimate_radius_one_up_one_low(0.0, 1.0, 0)


class TestOneUpOneLow:
    """Test the Laguerre-coefficient expansion."""

    def test_zero_argument(self):
        """Test a = 0 returns t exactly."""
        result = series_one_up_one_low(0.3, 1.0, 0.0)
        assert result.value == 0.3
        assert result.expansion.terms_used == 0

    def test_first_order(self):
        """Test x ~ t + T e^-t a for tiny a."""
        t, s, a = 0.5, 2.0, 1e-7
        result = series_one_up_one_low(t, s, a)
        assert result.value == pytest.approx(t + (t - s) * math.exp(-t) * a, abs=1e-13)

    def test_first_coefficient(self):
        """Test c_1 = T e^-t."""
        coeffs = one_up_one_low_coefficients(0.5, 2.0, 3)
        assert len(coeffs) == 3
        assert coeffs[0].to_float() == pytest.approx(-1.5 * math.exp(-0.5), rel=1e-14)

    def test_matches_solver(self):
        """Test agreement with the root finder at t = 0, s = 1, a = 0.1."""
        result = series_one_up_one_low(0.0, 1.0, 0.1, 64)
        roots = solve_all(GenWParams(upper=(0.0,), lower=(1.0,), a=0.1)).values
        assert result.value == pytest.approx(_nearest(roots, 0.0), abs=1e-10)
        assert result.expansion.converged

    @pytest.mark.parametrize("t,s", [(0.0, 1.0), (-1.0, 2.0), (1.0, 3.0)])
    def test_matches_solver_inside_half_radius(self, t, s):
        """Test 20 arguments within half the radius against the root finder."""
        radius = min(radius_one_up_one_low(t, s), branch_point_radius_one_up_one_low(t, s))
        for a in np.linspace(-0.5 * radius, 0.5 * radius, 20):
            result = series_one_up_one_low(t, s, float(a))
            if a == 0.0:
                continue
            roots = solve_all(GenWParams(upper=(t,), lower=(s,), a=float(a))).values
            assert result.value == pytest.approx(_nearest(roots, result.value), abs=1e-9)
            assert abs(_nearest(roots, t) - result.value) < 1e-9

    def test_reports_radius(self):
        """Test the expansion carries the effective radius."""
        result = series_one_up_one_low(0.0, 1.0, 0.05)
        assert result.expansion.radius == pytest.approx(branch_point_radius_one_up_one_low(0.0, 1.0))
        assert result.expansion.kind is SeriesKind.ONE_UP_ONE_LOW
        assert result.expansion.params == {"t": 0.0, "s": 1.0}

    @pytest.mark.parametrize("a", [0.21, 0.3, -0.3])
    def test_outside_radius_rejected(self, a):
        """Test |a| at or beyond the radius raises ConvergenceDomainError."""
        with pytest.raises(ConvergenceDomainError) as excinfo:
            series_one_up_one_low(0.0, 1.0, a)
        assert "radius" in excinfo.value.details

    def test_degenerate(self):
        """Test t = s raises DegenerateInputError."""
        with pytest.raises(DegenerateInputError):
            series_one_up_one_low(1.0, 1.0, 0.1)

    def test_truncation_flagged(self):
        """Test a short truncation reports a non-converged expansion."""
        result = series_one_up_one_low(0.0, 1.0, 0.1, n_max=3)
        assert result.expansion.terms_used == 3
        assert not result.expansion.converged
        assert result.expansion.truncation_estimate > 0.0

    def test_invalid_order(self):
        """Test n_max < 1 raises DomainError."""
        with pytest.raises(DomainError):
            series_one_up_one_low(0.0, 1.0, 0.1, n_max=0)


class TestTwoUp:
    """Test the Bessel-coefficient expansion."""

    def test_second_order_vanishes(self):
        """Test e^x x (x - 1) = a gives x = -a + O(a^3)."""
        result = series_two_up(0.0, 1.0, 0.01)
        assert result.expansion.coeffs[0].to_float() == pytest.approx(-1.0, rel=1e-15)
        assert result.expansion.coeffs[1].to_float() == 0.0

    def test_matches_solver(self):
        """Test arguments in [-0.05, 0.05] against the root finder."""
        for a in np.linspace(-0.05, 0.05, 21):
            if a == 0.0:
                continue
            result = series_two_up(0.0, 1.0, float(a))
            roots = solve_all(GenWParams(upper=(0.0, 1.0), a=float(a))).values
            assert result.value == pytest.approx(_nearest(roots, 0.0), abs=1e-9)

    def test_descending_parameters(self):
        """Test T < 0 around the larger parameter."""
        a = 0.02
        result = series_two_up(1.0, 0.0, a)
        roots = solve_all(GenWParams(upper=(0.0, 1.0), a=a)).values
        assert result.value == pytest.approx(_nearest(roots, 1.0), abs=1e-9)

    def test_degenerate(self):
        """Test t1 = t2 raises DegenerateInputError."""
        with pytest.raises(DegenerateInputError):
            series_two_up(2.0, 2.0, 0.1)

    def test_diverging(self):
        """Test far outside the disc the terms grow and the sum is refused."""
        with pytest.raises(DivergingSeriesError):
            series_two_up(0.0, 1.0, 50.0, n_max=200)

    def test_high_order_coefficients_stay_finite(self):
        """Test coefficients up to order 400 keep a finite log-magnitude."""
        coeffs = two_up_coefficients(0.0, 1.0, 400)
        assert len(coeffs) == 400
        assert all(c.value == 0.0 or math.isfinite(c.log_abs()) for c in coeffs)
        assert math.isfinite(coeffs[-1].log_abs())
        head = series_two_up(0.0, 1.0, 0.01, n_max=5).expansion.coeffs
        assert [c.to_float() for c in coeffs[:len(head)]] == [c.to_float() for c in head]


class TestRLambertSeries:
    """Test the M-polynomial expansion of W_r."""

    def test_zero(self):
        """Test W_r(0) = 0."""
        assert series_r_lambert(0.5, 0.0).value == 0.0

    @pytest.mark.parametrize("r", [-0.5, 0.5, 1.0, 3.0])
    def test_low_order_coefficients(self, r):
        """Test c_1 = 1/(r+1) and c_2 = -1/(r+1)^3."""
        coeffs = series_r_lambert(r, 0.01).expansion.coeffs
        assert coeffs[0].to_float() == pytest.approx(1.0 / (r + 1.0), rel=1e-15)
        assert coeffs[1].to_float() == pytest.approx(-1.0 / (r + 1.0) ** 3, rel=1e-15)

    @pytest.mark.parametrize("r,limit", [(-0.5, 0.03), (0.5, 0.1), (1.0, 0.1), (3.0, 0.1)])
    def test_matches_solver(self, r, limit):
        """Test agreement with the principal r-Lambert branch."""
        branch = principal_branch(branch_structure(r))
        for x in np.linspace(-limit, limit, 9):
            result = series_r_lambert(r, float(x))
            expected = r_lambert(RLambertQuery(r=r, n=float(x), branch=branch))
            assert result.value == pytest.approx(expected, abs=1e-10)

    @pytest.mark.parametrize("x", [-0.1, 0.05, 0.2])
    def test_classical_limit(self, x):
        """Test r = 0 reproduces W_0."""
        assert series_r_lambert(0.0, x).value == pytest.approx(lambert_w0(x), abs=1e-10)

    def test_degenerate(self):
        """Test r = -1 raises DegenerateInputError."""
        with pytest.raises(DegenerateInputError):
            series_r_lambert(-1.0, 0.1)

    def test_high_order_classical_coefficient(self):
        """Test c_300 = (-300)^299 / 300! at r = 0 without overflow."""
        coeffs = r_lambert_coefficients(0.0, 300)
        last = coeffs[-1]
        assert last.sign == -1
        expected = 299 * math.log(300.0) - math.lgamma(301.0)
        assert last.log_abs() == pytest.approx(expected, rel=1e-13)

    def test_high_order_coefficients_stay_finite(self):
        """Test coefficients up to order 300 keep a finite log-magnitude."""
        coeffs = r_lambert_coefficients(1.0, 300)
        assert all(c.value == 0.0 or math.isfinite(c.log_abs()) for c in coeffs)
        assert coeffs[0].to_float() == 0.5

    def test_settings_control_truncation(self):
        """Test series_n_max from the settings caps the number of terms."""
        result = series_r_lambert(1.0, 0.1, settings=Settings(series_n_max=4))
        assert result.expansion.terms_used == 4
