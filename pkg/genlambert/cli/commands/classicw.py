"""
Classical Lambert W command.
"""
import math
from typing import Annotated

import typer

from genlambert.cli.deps import PlainOption, VerboseOption, build_settings
from genlambert.cli.render import emit
from genlambert.core.exceptions import InvalidBranchError
from genlambert.schemas.classicw import ClassicBranch
from genlambert.schemas.output import OutputRecord, ResultEntry
from genlambert.services.classicw import lambert_w


def classicw(
    a: Annotated[float, typer.Option("--a", help="Argument")],
    branch: Annotated[int, typer.Option("--branch", help="0 for W_0, -1 for W_-1")] = 0,
    plain: PlainOption = False,
    verbose: VerboseOption = False,
) -> None:
    """
    Evaluate W_0(a) or W_-1(a).
    """
    settings = build_settings(verbose=verbose)
    if branch not in (ClassicBranch.PRINCIPAL, ClassicBranch.MINUS_ONE):
        raise InvalidBranchError(
            message="Classical W has real branches 0 and -1 only",
            details={"branch": branch}
        )
    w = lambert_w(branch, a, settings)
    residual = abs(w * math.exp(w) - a) if math.isfinite(w) else None

    emit(OutputRecord(
        command="classicw",
        query_echo={"branch": branch, "a": a},
        results=[ResultEntry(value=w, residual=residual, branch_index=branch)],
    ), plain)
