"""
Taylor series command.
"""
from typing import Annotated, Optional

import typer

from genlambert.cli.deps import PlainOption, VerboseOption, build_settings, require
from genlambert.cli.render import emit
from genlambert.schemas.output import Diagnostics, OutputRecord, ResultEntry
from genlambert.schemas.series import SeriesKind
from genlambert.services.series import (
    branch_point_radius_one_up_one_low,
    estimate_radius_one_up_one_low,
    radius_one_up_one_low,
    series_one_up_one_low,
    series_r_lambert,
    series_two_up,
)


def series(
    kind: Annotated[SeriesKind, typer.Argument(help="Which expansion to sum")],
    a: Annotated[float, typer.Option("--a", help="Expansion variable (a, or x for r-lambert)")],
    t: Annotated[Optional[float], typer.Option("--t", help="Upper parameter (one-up-one-low)")] = None,
    s: Annotated[Optional[float], typer.Option("--s", help="Lower parameter (one-up-one-low)")] = None,
    t1: Annotated[Optional[float], typer.Option("--t1", help="First upper parameter (two-up)")] = None,
    t2: Annotated[Optional[float], typer.Option("--t2", help="Second upper parameter (two-up)")] = None,
    r: Annotated[Optional[float], typer.Option("--r", help="Linear coefficient (r-lambert)")] = None,
    n_max: Annotated[Optional[int], typer.Option("--n-max", help="Truncation order")] = None,
    radius: Annotated[
        bool, typer.Option("--radius", help="Report the radius and its finite-order estimate")
    ] = False,
    plain: PlainOption = False,
    verbose: VerboseOption = False,
) -> None:
    """
    Sum a truncated Taylor expansion of a generalized W value.
    """
    settings = build_settings(verbose=verbose)
    extra: dict = {}
    if kind is SeriesKind.ONE_UP_ONE_LOW:
        t_value, s_value = require(t, "--t"), require(s, "--s")
        result = series_one_up_one_low(t_value, s_value, a, n_max, settings)
        if radius:
            below = t_value < s_value
            extra["radius"] = result.expansion.radius
            extra["radius_formula"] = radius_one_up_one_low(t_value, s_value) if below else None
            extra["radius_branch_point"] = (
                branch_point_radius_one_up_one_low(t_value, s_value) if below else None
            )
            extra["radius_estimate"] = estimate_radius_one_up_one_low(
                t_value, s_value, n_max or settings.series_n_max
            )
    elif kind is SeriesKind.TWO_UP:
        result = series_two_up(require(t1, "--t1"), require(t2, "--t2"), a, n_max, settings)
    else:
        result = series_r_lambert(require(r, "--r"), a, n_max, settings)

    expansion = result.expansion
    extra.update({
        "truncation_estimate": expansion.truncation_estimate,
        "converged": expansion.converged,
    })
    warnings = [] if expansion.converged else ["series truncated before reaching the relative cutoff"]

    emit(OutputRecord(
        command="series",
        query_echo={
            "kind": kind.value, "a": a, "t": t, "s": s, "t1": t1, "t2": t2, "r": r,
            "n_max": n_max or settings.series_n_max,
        },
        results=[ResultEntry(value=result.value)],
        diagnostics=Diagnostics(series_terms_used=expansion.terms_used, warnings=warnings, extra=extra),
    ), plain)
