"""
Logging configuration for the library and command line.
"""
import logging
import sys
from typing import Optional

from genlambert.core.config import Settings, get_settings


def setup_logging(settings: Optional[Settings] = None, verbose: bool = False) -> None:
    """
    Configure package-wide logging.

    Records go to standard error: standard output is reserved for results.

    Args:
        settings: Settings to read level and format from (defaults to cached settings)
        verbose: Force DEBUG level
    """
    settings = settings or get_settings()
    log_level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.WARNING)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(get_log_format(settings)))

    root = logging.getLogger("genlambert")
    root.handlers = [handler]
    root.setLevel(log_level)
    root.propagate = False

    root.debug(
        f"Logging configured: level={logging.getLevelName(log_level)}, "
        f"format={settings.log_format}"
    )


def get_log_format(settings: Optional[Settings] = None) -> str:
    """
    Get the appropriate log format based on settings.

    Returns:
        Log format string
    """
    settings = settings or get_settings()
    if settings.log_format == "json":
        return '{"time": "%(asctime)s", "name": "%(name)s", "level": "%(levelname)s", "message": "%(message)s"}'
    return "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class LoggerMixin:
    """Mixin to add logger to classes."""

    @property
    def logger(self) -> logging.Logger:
        """Get logger for the class."""
        return logging.getLogger(f"{self.__class__.__module__}.{self.__class__.__name__}")


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance.

    Args:
        name: Logger name (usually __name__)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)
