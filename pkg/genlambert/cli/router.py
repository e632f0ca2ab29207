"""
Command router that registers every subcommand on the root application.
"""
import typer

from genlambert.cli.commands import apps, classicw, genw, rlambert, series


def register_commands(app: typer.Typer) -> None:
    """Attach all subcommands to ``app``."""
    app.command("classicw")(classicw.classicw)
    app.command("genw")(genw.genw)
    app.command("quadexp")(genw.quadexp)
    app.command("rlambert")(rlambert.rlambert)
    app.command("series")(series.series)
    app.command("langevin-inv")(apps.langevin_inv)
    app.command("langevin")(apps.langevin_forward)
    app.command("dispersion")(apps.dispersion)
    app.command("dde")(apps.dde)
    app.command("doublewell")(apps.doublewell)
