"""
Application commands: Langevin, dispersion, delay equations and the double well.
"""
from typing import Annotated

import typer

from genlambert.cli.deps import PlainOption, TolOption, VerboseOption, build_settings
from genlambert.cli.render import emit, solution_diagnostics, solution_entries
from genlambert.schemas.apps import STANDARD_GRAVITY, Dde2Params, DispersionParams, DoubleWellParams
from genlambert.schemas.output import Diagnostics, OutputRecord, ResultEntry
from genlambert.services.apps import (
    dde2_real_roots,
    double_well_levels,
    frequency_from_wavenumber,
    inverse_langevin,
    invert_dispersion,
    langevin,
)


def langevin_inv(
    a: Annotated[float, typer.Option("--a", help="Value in (-1, 1)")],
    plain: PlainOption = False,
    verbose: VerboseOption = False,
) -> None:
    """
    Inverse Langevin function: x with coth(x) - 1/x = a.
    """
    settings = build_settings(verbose=verbose)
    x = inverse_langevin(a, settings)
    emit(OutputRecord(
        command="langevin-inv",
        query_echo={"a": a},
        results=[ResultEntry(value=x, residual=abs(langevin(x, settings) - a))],
    ), plain)


def langevin_forward(
    x: Annotated[float, typer.Option("--x", help="Argument")],
    plain: PlainOption = False,
    verbose: VerboseOption = False,
) -> None:
    """
    Langevin function coth(x) - 1/x.
    """
    settings = build_settings(verbose=verbose)
    emit(OutputRecord(
        command="langevin",
        query_echo={"x": x},
        results=[ResultEntry(value=langevin(x, settings))],
    ), plain)


def dispersion(
    omega: Annotated[float, typer.Option("--omega", help="Angular frequency (rad/s)")],
    h: Annotated[float, typer.Option("--h", help="Depth (m)")],
    g: Annotated[float, typer.Option("--g", help="Gravitational acceleration (m/s^2)")] = STANDARD_GRAVITY,
    rho1: Annotated[float, typer.Option("--rho1", help="Lower layer density (kg/m^3)")] = 1000.0,
    rho2: Annotated[float, typer.Option("--rho2", help="Upper layer density, 0 for one layer")] = 0.0,
    plain: PlainOption = False,
    verbose: VerboseOption = False,
) -> None:
    """
    Wavenumber k of a linear water wave with frequency omega on depth h.
    """
    settings = build_settings(verbose=verbose)
    params = DispersionParams(omega=omega, g=g, h=h, rho1=rho1, rho2=rho2)
    result = invert_dispersion(params, settings)
    recomputed = frequency_from_wavenumber(result.k, h, g, rho1, rho2)
    emit(OutputRecord(
        command="dispersion",
        query_echo=params.model_dump(),
        results=[ResultEntry(value=result.k, residual=abs(recomputed - omega))],
        diagnostics=Diagnostics(extra={"x": result.x, "y": result.y, "two_layer": result.two_layer}),
    ), plain)


def dde(
    t1: Annotated[float, typer.Option("--t1", help="First upper root")],
    t2: Annotated[float, typer.Option("--t2", help="Second upper root")],
    s1: Annotated[float, typer.Option("--s1", help="Lower root")],
    b1: Annotated[float, typer.Option("--b1", help="Feedback gain")],
    tau: Annotated[float, typer.Option("--tau", help="Delay")],
    tol: TolOption = None,
    plain: PlainOption = False,
    verbose: VerboseOption = False,
) -> None:
    """
    Real roots of (l - t1)(l - t2) = b1 e^{-l tau} (l - s1).
    """
    settings = build_settings(tol, verbose)
    params = Dde2Params(t1=t1, t2=t2, s1=s1, b1=b1, tau=tau)
    result = dde2_real_roots(params, settings=settings)

    diagnostics = solution_diagnostics(result.solutions)
    diagnostics.extra.update({
        "common_roots": list(result.common_roots),
        "rightmost": result.rightmost,
        "rightmost_sign": result.rightmost_sign,
        "real_spectrum_stable": result.real_spectrum_stable,
        "verdict": result.verdict,
    })
    emit(OutputRecord(
        command="dde",
        query_echo=params.model_dump(),
        results=solution_entries(result.solutions),
        diagnostics=diagnostics,
    ), plain)


def doublewell(
    q: Annotated[float, typer.Option("--q", help="Well depth")],
    separation: Annotated[float, typer.Option("--R", help="Well separation")],
    plain: PlainOption = False,
    verbose: VerboseOption = False,
) -> None:
    """
    Decay constants d+ and d- and the energies E+ and E- of the double-well model.
    """
    build_settings(verbose=verbose)
    params = DoubleWellParams(q=q, R=separation)
    levels = double_well_levels(params)
    emit(OutputRecord(
        command="doublewell",
        query_echo=params.model_dump(),
        results=[
            ResultEntry(value=levels.d_plus),
            ResultEntry(value=levels.d_minus),
            ResultEntry(value=levels.e_plus),
            ResultEntry(value=levels.e_minus),
        ],
        diagnostics=Diagnostics(extra={"order": ["d_plus", "d_minus", "e_plus", "e_minus"]}),
    ), plain)
