"""
Unit tests for settings, exceptions and logging.
"""
import logging

import pytest
from pydantic import ValidationError

from genlambert.core.config import Settings, get_settings
from genlambert.core.exceptions import (
    EXIT_DOMAIN,
    EXIT_NO_SOLUTION,
    ConvergenceDomainError,
    DomainError,
    NoSolutionError,
)
from genlambert.core.logging import get_log_format, get_logger, setup_logging


class TestSettings:
    """Test the settings model."""

    def test_defaults(self, settings):
        """Test the documented defaults."""
        assert settings.default_tol == 1e-12
        assert settings.search_margin == 50.0
        assert settings.series_n_max == 64
        assert settings.series_rel_cutoff == 1e-16
        assert settings.deep_water_threshold == 20.0
        assert settings.langevin_direct_cutoff == 1e-3
        assert settings.log_level == "WARNING"

    def test_cached(self):
        """Test get_settings returns one shared instance."""
        assert get_settings() is get_settings()

    def test_ignores_environment(self, monkeypatch):
        """Test environment variables do not reach the settings."""
        monkeypatch.setenv("DEFAULT_TOL", "0.5")
        assert Settings().default_tol == 1e-12

    @pytest.mark.parametrize("overrides", [
        {"default_tol": 0.0},
        {"series_rel_cutoff": -1.0},
        {"log_format": "xml"},
        {"series_n_max": 0},
    ])
    def test_rejects_invalid_values(self, overrides):
        """Test invalid overrides raise ValidationError."""
        with pytest.raises(ValidationError):
            Settings(**overrides)


class TestExceptions:
    """Test the exception hierarchy."""

    def test_exit_codes(self):
        """Test each error carries its exit status."""
        assert DomainError().exit_code == EXIT_DOMAIN
        assert NoSolutionError().exit_code == EXIT_NO_SOLUTION

    def test_radius_in_details(self):
        """Test ConvergenceDomainError records the radius."""
        exc = ConvergenceDomainError(radius=0.25, details={"a": 0.3})
        assert exc.details == {"a": 0.3, "radius": 0.25}
        assert str(exc) == exc.message


class TestLogging:
    """Test logging configuration."""

    def test_records_go_to_stderr(self, settings, capsys):
        """Test warnings are written to standard error only."""
        setup_logging(settings)
        get_logger("genlambert.tests").warning("bracket lost")
        captured = capsys.readouterr()
        assert "bracket lost" in captured.err
        assert captured.out == ""

    def test_verbose_lowers_level(self, settings):
        """Test verbose mode switches to DEBUG."""
        setup_logging(settings, verbose=True)
        assert logging.getLogger("genlambert").level == logging.DEBUG
        setup_logging(settings)
        assert logging.getLogger("genlambert").level == logging.WARNING

    def test_json_format(self):
        """Test the JSON-ish format string."""
        assert get_log_format(Settings(log_format="json")).startswith('{"time"')
        assert "%(levelname)s" in get_log_format(Settings(log_format="text"))
