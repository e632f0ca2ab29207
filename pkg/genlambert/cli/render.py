"""
Building and printing output records.
"""
import typer

from genlambert.schemas.genw import SolutionSet
from genlambert.schemas.output import Diagnostics, OutputRecord, ResultEntry


def solution_entries(solutions: SolutionSet) -> list[ResultEntry]:
    """One entry per root, labelled by ascending position."""
    return [
        ResultEntry(value=root.x, residual=root.residual, branch_index=root.branch_index)
        for root in solutions.roots
    ]


def solution_diagnostics(solutions: SolutionSet) -> Diagnostics:
    """Scanned brackets, the reported domain and per-root warnings."""
    warnings = []
    for root in solutions.roots:
        if root.multiplicity > 1:
            warnings.append(f"root {root.branch_index} is tangential (multiplicity {root.multiplicity})")
        if root.ill_conditioned:
            warnings.append(f"root {root.branch_index} is ill-conditioned")
    return Diagnostics(
        brackets=[info.model_dump() for info in solutions.bracket_report],
        warnings=warnings,
        extra={
            "xmin": solutions.xmin,
            "xmax": solutions.xmax,
            "explicit_domain": solutions.explicit_domain,
            "tol": solutions.tol,
        },
    )


def emit(record: OutputRecord, plain: bool) -> None:
    """Write the record to standard output."""
    if plain:
        for line in record.plain_lines():
            typer.echo(line)
        return
    typer.echo(record.model_dump_json(indent=2))
