"""
Generalized Lambert W commands.
"""
from typing import Annotated, Optional

import typer

from genlambert.cli.deps import (
    PlainOption,
    TolOption,
    VerboseOption,
    XmaxOption,
    XminOption,
    build_settings,
    parse_values,
)
from genlambert.cli.render import emit, solution_diagnostics, solution_entries
from genlambert.core.logging import get_logger
from genlambert.schemas.genw import GenWParams
from genlambert.schemas.output import OutputRecord, ResultEntry
from genlambert.services.apps import solve_quadratic_exp
from genlambert.services.genw import GenWSolver, reduce_special

logger = get_logger(__name__)


def genw(
    a: Annotated[float, typer.Option("--a", help="Right-hand side")],
    upper: Annotated[Optional[str], typer.Option("--upper", help="Upper parameters t_i, comma-separated")] = None,
    lower: Annotated[Optional[str], typer.Option("--lower", help="Lower parameters s_j, comma-separated")] = None,
    branch: Annotated[
        Optional[int],
        typer.Option("--branch", help="Report only the solution with this ascending index"),
    ] = None,
    tol: TolOption = None,
    xmin: XminOption = None,
    xmax: XmaxOption = None,
    plain: PlainOption = False,
    verbose: VerboseOption = False,
) -> None:
    """
    Solve e^x prod(x - t_i) / prod(x - s_j) = a for every real x.
    """
    settings = build_settings(tol, verbose)
    params = GenWParams(
        upper=parse_values(upper, "--upper"),
        lower=parse_values(lower, "--lower"),
        a=a,
    )
    solutions = GenWSolver(settings).solve_all(params, xmin=xmin, xmax=xmax)
    logger.debug(f"genw found {len(solutions)} solution(s)")

    if branch is not None:
        root = solutions.root(branch)
        results = [ResultEntry(value=root.x, residual=root.residual, branch_index=root.branch_index)]
    else:
        results = solution_entries(solutions)

    diagnostics = solution_diagnostics(solutions)
    form = reduce_special(params)
    if form is not None:
        diagnostics.extra["closed_form"] = form.model_dump(mode="json")

    emit(OutputRecord(
        command="genw",
        query_echo={
            "upper": list(params.upper), "lower": list(params.lower), "a": a,
            "branch": branch, "tol": settings.default_tol, "xmin": xmin, "xmax": xmax,
        },
        results=results,
        diagnostics=diagnostics,
    ), plain)


def quadexp(
    c: Annotated[float, typer.Option("--c", help="Decay rate")],
    a0: Annotated[float, typer.Option("--a0", help="Scale")],
    t1: Annotated[float, typer.Option("--t1", help="First root of the quadratic")],
    t2: Annotated[float, typer.Option("--t2", help="Second root of the quadratic")],
    tol: TolOption = None,
    plain: PlainOption = False,
    verbose: VerboseOption = False,
) -> None:
    """
    Solve e^{-c x} = a0 (x - t1)(x - t2) for every real x.
    """
    settings = build_settings(tol, verbose)
    solutions = solve_quadratic_exp(c, a0, t1, t2, settings=settings)
    emit(OutputRecord(
        command="quadexp",
        query_echo={"c": c, "a0": a0, "t1": t1, "t2": t2, "tol": settings.default_tol},
        results=solution_entries(solutions),
        diagnostics=solution_diagnostics(solutions),
    ), plain)
