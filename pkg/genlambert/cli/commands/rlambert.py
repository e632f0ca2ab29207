"""
r-Lambert function command.
"""
from typing import Annotated, Optional

import typer

from genlambert.cli.deps import PlainOption, TolOption, VerboseOption, build_settings, require
from genlambert.cli.render import emit
from genlambert.core.exceptions import NoSolutionError
from genlambert.schemas.output import Diagnostics, OutputRecord, ResultEntry
from genlambert.schemas.rlambert import AsymptoticDirection, RLambertQuery
from genlambert.services.rlambert import (
    branch_containing,
    branch_structure,
    f,
    principal_branch,
    r_lambert,
    r_lambert_all,
    r_lambert_asymptotic,
)


def rlambert(
    r: Annotated[float, typer.Option("--r", help="Linear coefficient r")],
    n: Annotated[Optional[float], typer.Option("--n", help="Right-hand side")] = None,
    branch: Annotated[
        Optional[int],
        typer.Option("--branch", help="Branch index, counted from the left"),
    ] = None,
    structure: Annotated[
        bool, typer.Option("--structure", help="Report critical points and branch intervals")
    ] = False,
    asymptotic: Annotated[
        Optional[AsymptoticDirection],
        typer.Option("--asymptotic", help="Evaluate the asymptotic form at n instead"),
    ] = None,
    tol: TolOption = None,
    plain: PlainOption = False,
    verbose: VerboseOption = False,
) -> None:
    """
    Solve x e^x + r x = n on one branch or on all of them.
    """
    settings = build_settings(tol, verbose)
    layout = branch_structure(r)
    diagnostics = Diagnostics(extra={"branch_count": layout.branch_count, "principal_branch": principal_branch(layout)})
    if structure:
        diagnostics.extra["structure"] = layout.model_dump(mode="json")

    results: list[ResultEntry] = []
    if asymptotic is not None:
        value = r_lambert_asymptotic(r, require(n, "--n"), asymptotic)
        results.append(ResultEntry(value=value))
    elif n is not None and branch is not None:
        x = r_lambert(RLambertQuery(r=r, n=n, branch=branch), settings=settings)
        if x is None:
            raise NoSolutionError(
                message=f"n={n} is outside the image of branch {branch}",
                details={"r": r, "n": n, "branch": branch}
            )
        results.append(ResultEntry(value=x, residual=abs(f(r, x) - n), branch_index=branch))
    elif n is not None:
        for root in r_lambert_all(r, n, settings=settings).roots:
            results.append(ResultEntry(
                value=root.x, residual=root.residual, branch_index=branch_containing(layout, root.x)
            ))
    elif structure:
        results = [
            ResultEntry(value=point, branch_index=i) for i, point in enumerate(layout.critical_points)
        ]
    else:
        require(n, "--n")

    emit(OutputRecord(
        command="rlambert",
        query_echo={
            "r": r, "n": n, "branch": branch, "structure": structure,
            "asymptotic": asymptotic.value if asymptotic is not None else None,
            "tol": settings.default_tol,
        },
        results=results,
        diagnostics=diagnostics,
    ), plain)
