"""
Command-line output record.
"""
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field


class ResultEntry(BaseModel):
    """One reported value."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    value: float
    residual: Optional[float] = None
    branch_index: Optional[int] = None


class Diagnostics(BaseModel):
    """Solver and series diagnostics attached to a record."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    brackets: list[dict[str, Any]] = Field(default_factory=list, description="Monotone intervals scanned")
    series_terms_used: Optional[int] = None
    warnings: list[str] = Field(default_factory=list)
    extra: dict[str, Any] = Field(default_factory=dict)


class OutputRecord(BaseModel):
    """One structured record per command-line invocation."""

    model_config = ConfigDict(
        ser_json_inf_nan="constants",
        json_schema_extra={
            "example": {
                "command": "classicw",
                "query_echo": {"branch": 0, "a": 1.0},
                "results": [{"value": 0.5671432904097838, "residual": 0.0, "branch_index": 0}],
                "diagnostics": {"brackets": [], "series_terms_used": None, "warnings": [], "extra": {}},
            }
        },
    )

    command: str
    query_echo: dict[str, Any] = Field(default_factory=dict)
    results: list[ResultEntry] = Field(default_factory=list)
    diagnostics: Diagnostics = Field(default_factory=Diagnostics)

    def plain_lines(self) -> list[str]:
        """Bare values with 17 significant digits, one per line."""
        return [format(entry.value, ".17g") for entry in self.results]
