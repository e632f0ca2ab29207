"""
Command-line application entry point.
"""
import sys
from typing import Optional, Sequence

import click
import typer
from pydantic import ValidationError

from genlambert.cli.router import register_commands
from genlambert.core.config import get_settings
from genlambert.core.exceptions import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, GenLambertException
from genlambert.core.logging import get_logger

settings = get_settings()
logger = get_logger(__name__)

# Create Typer application
app = typer.Typer(
    name=settings.app_name,
    help=(
        "Real solutions of e^x prod(x - t_i) / prod(x - s_j) = a, the r-Lambert function, "
        "their Taylor expansions, and physical problems that reduce to them."
    ),
    add_completion=False,
    no_args_is_help=True,
    pretty_exceptions_enable=False,
)


def _version_callback(value: bool) -> None:
    if value:
        typer.echo(f"{settings.app_name} {settings.app_version}")
        raise typer.Exit()


@app.callback()
def root(
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True, help="Show the version and exit"
    ),
) -> None:
    """Generalized Lambert W toolkit."""


register_commands(app)


def _report(message: str, details: Optional[dict] = None) -> None:
    typer.echo(f"error: {message}", err=True)
    for key, value in (details or {}).items():
        typer.echo(f"  {key}: {value}", err=True)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command and map its outcome to an exit status.

    Args:
        argv: Arguments after the program name (sys.argv[1:] by default)

    Returns:
        0 on success, 2 on domain or validation errors, 3 when a requested
        solution does not exist, 64 on usage errors
    """
    command = typer.main.get_command(app)
    args = list(argv) if argv is not None else sys.argv[1:]
    try:
        outcome = command.main(args=args, prog_name=settings.app_name, standalone_mode=False)
    except GenLambertException as exc:
        _report(exc.message, exc.details)
        return exc.exit_code
    except ValidationError as exc:
        _report("Invalid input", {
            " -> ".join(str(loc) for loc in error["loc"]) or "input": error["msg"]
            for error in exc.errors()
        })
        return EXIT_DOMAIN
    except click.UsageError as exc:
        exc.show()
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        _report("Aborted")
        return EXIT_USAGE
    except Exception as exc:
        logger.error(f"Unexpected error: {exc}", exc_info=True)
        _report("Internal error", {"message": str(exc)})
        return 1
    # click hands back the exit code of typer.Exit (--help, --version) instead of raising
    return outcome if isinstance(outcome, int) else EXIT_OK


def cli_entry() -> None:
    """Console-script entry point."""
    sys.exit(run())


if __name__ == "__main__":
    cli_entry()
