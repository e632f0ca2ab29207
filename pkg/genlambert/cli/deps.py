"""
Shared option types and helpers for the command line.
"""
from typing import Annotated, Optional

import typer

from genlambert.core.config import Settings, get_settings
from genlambert.core.logging import setup_logging

PlainOption = Annotated[bool, typer.Option("--plain", help="Print bare values, one per line")]
VerboseOption = Annotated[bool, typer.Option("--verbose", "-v", help="Debug diagnostics on standard error")]
TolOption = Annotated[
    Optional[float],
    typer.Option("--tol", help="Relative residual tolerance (default 1e-12)"),
]
XminOption = Annotated[Optional[float], typer.Option("--xmin", help="Left end of the search domain")]
XmaxOption = Annotated[Optional[float], typer.Option("--xmax", help="Right end of the search domain")]


def build_settings(tol: Optional[float] = None, verbose: bool = False) -> Settings:
    """
    Settings for one invocation, with logging configured.

    Args:
        tol: Tolerance override from --tol
        verbose: Lower the log level to DEBUG

    Returns:
        Settings instance
    """
    settings = Settings(default_tol=tol) if tol is not None else get_settings()
    setup_logging(settings, verbose=verbose)
    return settings


def parse_values(raw: Optional[str], option: str) -> tuple[float, ...]:
    """
    Parse a comma-separated list such as "0,0" or "-1.5, 2".

    Raises:
        typer.BadParameter: If an entry is not a number
    """
    if raw is None or not raw.strip():
        return ()
    try:
        return tuple(float(item) for item in raw.split(","))
    except ValueError:
        raise typer.BadParameter(f"expected comma-separated numbers, got {raw!r}", param_hint=option)


def require(value: Optional[float], option: str) -> float:
    """Insist on an option that is only optional for some modes."""
    if value is None:
        raise typer.BadParameter("this option is required here", param_hint=option)
    return value
