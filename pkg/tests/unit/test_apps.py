"""
Unit tests for the physical applications.
"""
import math

import numpy as np
import pytest

from genlambert.core.config import Settings
from genlambert.core.exceptions import DomainError
from genlambert.services import apps as apps_module
from genlambert.schemas.apps import Dde2Params, DispersionParams, DoubleWellParams
from genlambert.services.apps import (
    dde2_real_roots,
    double_well_levels,
    frequency_from_wavenumber,
    inverse_langevin,
    inverse_langevin_direct,
    invert_dispersion,
    langevin,
    langevin_derivative,
    solve_quadratic_exp,
    solve_single_layer,
    solve_two_layer,
)


class TestDoubleWell:
    """Test the double-well Dirac delta levels."""

    def test_unit_parameters(self):
        """Test q = R = 1 puts the odd level exactly at zero."""
        levels = double_well_levels(DoubleWellParams(q=1.0, R=1.0))
        assert levels.d_minus == 0.0
        assert levels.d_plus == pytest.approx(1.2784645427610738, rel=1e-14)
        assert levels.e_plus == pytest.approx(-0.5 * levels.d_plus ** 2)
        assert levels.e_plus == pytest.approx(-0.817236, abs=1e-5)

    def test_residuals(self):
        """Test d = q (1 +- e^{-d R}) across a grid of parameters."""
        for q in np.linspace(0.1, 10.0, 12):
            for big_r in np.linspace(0.1, 10.0, 12):
                levels = double_well_levels(DoubleWellParams(q=float(q), R=float(big_r)))
                d = levels.d_plus
                assert abs(d - q * (1.0 + math.exp(-d * big_r))) <= 1e-10
                d = levels.d_minus
                assert abs(d - q * (1.0 - math.exp(-d * big_r))) <= 1e-10

    def test_deep_wells(self):
        """Test both levels approach q for large q R."""
        levels = double_well_levels(DoubleWellParams(q=50.0, R=1.0))
        assert levels.d_plus == pytest.approx(50.0, rel=1e-12)
        assert levels.d_minus == pytest.approx(50.0, rel=1e-12)

    def test_invalid_parameters(self):
        """Test non-positive q fails validation."""
        with pytest.raises(ValueError):
            DoubleWellParams(q=-1.0, R=1.0)


class TestQuadraticExp:
    """Test e^{-c x} = a0 (x - t1)(x - t2)."""

    def test_unit_case(self):
        """Test x^2 = e^-x has the single root 0.7034674..."""
        solutions = solve_quadratic_exp(1.0, 1.0, 0.0, 0.0)
        assert solutions.values == pytest.approx([0.7034674224983917], abs=1e-12)

    def test_root_at_origin(self):
        """Test a0 t1 t2 = 1 with c = -1 makes x = 0 a root."""
        solutions = solve_quadratic_exp(-1.0, 2.0, 1.0, 0.5)
        assert any(abs(x) < 1e-12 for x in solutions.values)

    def test_matches_grid_scan(self, grid_roots):
        """Test e^{-x} = 1 - x^2 against a sign scan."""
        solutions = solve_quadratic_exp(1.0, -1.0, -1.0, 1.0)
        expected = grid_roots(lambda x: np.exp(-x) + (x + 1.0) * (x - 1.0), -30.0, 30.0, 600_000)
        assert len(solutions) == len(expected) == 2
        assert solutions.values == pytest.approx(expected, abs=1e-9)
        for root in solutions.roots:
            assert root.residual <= 1e-12


class TestDde:
    """Test real characteristic roots of the delay equation."""

    def test_common_root(self):
        """Test t1 = t2 = s1 = 0 with b1 = e, tau = 1 gives {0, 1}."""
        result = dde2_real_roots(Dde2Params(t1=0.0, t2=0.0, s1=0.0, b1=math.e, tau=1.0))
        assert result.solutions.values == pytest.approx([0.0, 1.0], abs=1e-12)
        assert result.common_roots == (0.0,)
        assert result.rightmost == pytest.approx(1.0, abs=1e-12)
        assert result.rightmost_sign == 1
        assert result.real_spectrum_stable is False
        assert result.verdict == "real-spectrum only"

    def test_no_feedback(self):
        """Test b1 = 0 returns t1 and t2 exactly."""
        result = dde2_real_roots(Dde2Params(t1=-1.0, t2=-2.0, s1=0.5, b1=0.0, tau=1.0))
        assert result.solutions.values == [-2.0, -1.0]
        assert result.real_spectrum_stable is True
        assert result.rightmost_sign == -1

    @pytest.mark.slow
    def test_matches_grid_scan(self, rng, grid_roots):
        """Test random instances against a sign scan of the characteristic function."""
        checked = 0
        for _ in range(80):
            t1, t2, s1 = (float(v) for v in rng.uniform(-3.0, 3.0, 3))
            b1 = float(rng.uniform(-3.0, 3.0))
            tau = float(rng.uniform(0.2, 2.0))
            params = Dde2Params(t1=t1, t2=t2, s1=s1, b1=b1, tau=tau)
            result = dde2_real_roots(params)
            inside = [x for x in result.solutions.values if -30.0 < x < 30.0]
            points = [-30.0] + inside + [30.0]
            if any(b - a < 1e-3 for a, b in zip(points, points[1:])):
                continue
            if any(root.multiplicity > 1 for root in result.solutions.roots):
                continue

            def characteristic(x, t1=t1, t2=t2, s1=s1, b1=b1, tau=tau):
                return (x - t1) * (x - t2) - b1 * np.exp(-x * tau) * (x - s1)

            expected = grid_roots(characteristic, -30.0, 30.0, 600_000)
            assert len(inside) == len(expected), params
            assert inside == pytest.approx(expected, abs=1e-8), params
            for root in result.solutions.roots:
                scale = 1.0 + abs(root.x) ** 2 + abs(b1) * math.exp(-root.x * tau) * (1.0 + abs(root.x))
                assert root.residual <= 1e-10 * scale, params
            checked += 1
        assert checked > 60

    def test_stability_verdict(self):
        """Test a negative rightmost root is reported stable."""
        result = dde2_real_roots(Dde2Params(t1=-1.0, t2=-2.0, s1=-3.0, b1=0.1, tau=1.0))
        assert result.rightmost is not None
        assert result.rightmost < 0.0
        assert result.real_spectrum_stable is True

    def test_invalid_delay(self):
        """Test tau <= 0 fails validation."""
        with pytest.raises(ValueError):
            Dde2Params(t1=0.0, t2=1.0, s1=2.0, b1=1.0, tau=0.0)


class TestDispersion:
    """Test inversion of the water-wave dispersion relation."""

    def test_unit_depth(self):
        """Test w^2 = 9.81 tanh(1) on h = 1 gives k = 1."""
        omega = math.sqrt(9.81 * math.tanh(1.0))
        result = invert_dispersion(DispersionParams(omega=omega, h=1.0))
        assert result.k == pytest.approx(1.0, rel=1e-12)
        assert not result.two_layer

    def test_single_layer_bound_and_residual(self):
        """Test x > max(y, sqrt(y)) and x tanh(x) = y over several decades."""
        for y in np.logspace(-6, 3, 200):
            y = float(y)
            x = solve_single_layer(y)
            assert x * math.tanh(x) == pytest.approx(y, rel=1e-12)
            if y > 15.0:
                # x - y falls below half an ulp of y
                assert x >= y
            else:
                assert x > max(y, math.sqrt(y))

    def test_single_layer_rejects_non_positive(self):
        """Test y <= 0 raises DomainError."""
        with pytest.raises(DomainError):
            solve_single_layer(0.0)

    def test_two_layer_reduces_to_single(self):
        """Test rho2 = 0 in the two-layer relation reproduces the single layer."""
        for y in [1e-3, 0.1, 1.0, 5.0, 15.0]:
            assert solve_two_layer(y, 1000.0, 0.0) == pytest.approx(solve_single_layer(y), rel=1e-12)

    def test_two_layer_round_trip(self):
        """Test the recovered wavenumber reproduces the frequency."""
        params = DispersionParams(omega=1.2, h=10.0, rho1=1025.0, rho2=1000.0)
        result = invert_dispersion(params)
        assert result.two_layer
        omega = frequency_from_wavenumber(result.k, params.h, params.g, params.rho1, params.rho2)
        assert omega == pytest.approx(params.omega, rel=1e-12)

    def test_two_layer_needs_heavier_lower_layer(self):
        """Test rho1 <= rho2 raises DomainError."""
        with pytest.raises(DomainError):
            invert_dispersion(DispersionParams(omega=1.0, h=1.0, rho1=1000.0, rho2=1000.0))

    @pytest.mark.parametrize("omega,h", [(0.5, 2.0), (2.0, 5.0), (10.0, 0.3)])
    def test_single_layer_round_trip(self, omega, h):
        """Test frequency_from_wavenumber inverts the solver."""
        result = invert_dispersion(DispersionParams(omega=omega, h=h))
        assert frequency_from_wavenumber(result.k, h) == pytest.approx(omega, rel=1e-12)


class TestLangevin:
    """Test the Langevin function and its inverse."""

    def test_forward_values(self):
        """Test L(0) = 0 and L(1) = coth(1) - 1."""
        assert langevin(0.0) == 0.0
        assert langevin(1.0) == pytest.approx(1.0 / math.tanh(1.0) - 1.0, rel=1e-15)

    def test_forward_is_odd(self):
        """Test L(-x) = -L(x)."""
        for x in [1e-4, 0.5, 3.0]:
            assert langevin(-x) == pytest.approx(-langevin(x), rel=1e-15)

    def test_series_cutoff_is_continuous(self):
        """Test the Taylor branch meets the closed form at the cutoff."""
        assert langevin(0.0099999) == pytest.approx(langevin(0.0100001), rel=1e-4)
        assert langevin(0.0099999) == pytest.approx(0.0099999 / 3.0, rel=1e-4)

    def test_derivative(self):
        """Test L' against a central difference."""
        h = 1e-6
        for x in [0.005, 0.3, 2.0]:
            numeric = (langevin(x + h) - langevin(x - h)) / (2 * h)
            assert langevin_derivative(x) == pytest.approx(numeric, rel=1e-6)

    @pytest.mark.parametrize("a,expected", [
        (0.0, 0.0),
        (1.0 / math.tanh(1.0) - 1.0, 1.0),
        (1.0 / math.tanh(2.0) - 0.5, 2.0),
    ])
    def test_inverse_values(self, a, expected):
        """Test inverses of known forward values."""
        assert inverse_langevin(a) == pytest.approx(expected, abs=1e-12)

    def test_round_trip(self):
        """Test L(L^-1(a)) = a on a grid in (-1, 1)."""
        for a in np.linspace(-0.99, 0.99, 1000):
            assert abs(langevin(inverse_langevin(float(a))) - a) <= 1e-11

    def test_matches_direct_solver(self):
        """Test the generalized W route agrees with Newton on L."""
        for a in np.linspace(0.001, 0.99, 200):
            a = float(a)
            assert inverse_langevin(a) == pytest.approx(inverse_langevin_direct(a), abs=1e-10)

    @pytest.mark.parametrize("a", [0.002, 0.05, 0.3, 0.5, 0.8])
    def test_reduced_root_is_used(self, monkeypatch, a):
        """Test the generalized W root needs only a small polish and no direct solve."""
        warnings = []
        monkeypatch.setattr(apps_module.logger, "warning", warnings.append)

        def refuse(*args, **kwargs):
            raise AssertionError("direct inversion was used")

        monkeypatch.setattr(apps_module, "_solve_langevin", refuse)
        x = inverse_langevin(a)
        assert warnings == []
        assert abs(langevin(x) - a) <= 1e-14

    def test_small_argument_inverted_directly(self):
        """Test arguments below the cutoff match Newton on L exactly."""
        settings = Settings()
        a = 0.5 * settings.langevin_direct_cutoff
        assert inverse_langevin(a, settings) == inverse_langevin_direct(a, settings)
        assert inverse_langevin(a) == pytest.approx(3.0 * a, rel=1e-6)

    def test_odd_symmetry(self):
        """Test L^-1(-a) = -L^-1(a) exactly."""
        for a in [1e-8, 0.2, 0.7, 0.95]:
            assert inverse_langevin(-a) == -inverse_langevin(a)

    @pytest.mark.parametrize("a", [1.0, -1.0, 1.5])
    def test_domain(self, a):
        """Test |a| >= 1 raises DomainError."""
        with pytest.raises(DomainError):
            inverse_langevin(a)
