"""
Library configuration using Pydantic Settings.

Settings come from explicit constructor arguments only: the command line
builds overrides from its flags, and no environment variables are read.
"""
from functools import lru_cache

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """Numerical and logging settings shared by every service."""

    model_config = SettingsConfigDict(
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="genlambert", description="Application name")
    app_version: str = Field(default="1.0.0", description="Application version")

    # Root finding
    default_tol: float = Field(
        default=1e-12,
        description="Relative residual tolerance |F(x) - a| <= tol * (1 + |a|)",
    )
    search_margin: float = Field(
        default=50.0,
        gt=0.0,
        description="Default search domain extends this far beyond the extreme parameters",
    )
    max_bracket_steps: int = Field(
        default=2200,
        ge=10,
        description="Maximum halvings/doublings while pushing a bracket towards a pole or infinity",
    )
    newton_max_iter: int = Field(default=200, ge=5, description="Safeguarded Newton iteration cap")
    branch_point_slack: float = Field(
        default=1e-15,
        ge=0.0,
        description="Arguments this far below -1/e are snapped onto the branch point",
    )

    # Series
    series_n_max: int = Field(default=64, ge=1, description="Default number of series terms")
    series_rel_cutoff: float = Field(
        default=1e-16,
        description="Stop summing once |term| <= cutoff * |partial sum|",
    )
    series_growth_patience: int = Field(
        default=5,
        ge=2,
        description="Consecutive growing terms tolerated before a series is declared diverging",
    )

    # Applications
    deep_water_threshold: float = Field(
        default=20.0,
        gt=0.0,
        description="For y above this value x tanh(x) = y is solved by x = y",
    )
    langevin_series_cutoff: float = Field(
        default=1e-2,
        gt=0.0,
        description="Below this |x| the Langevin function is evaluated from its Taylor series",
    )
    langevin_direct_cutoff: float = Field(
        default=1e-3,
        gt=0.0,
        description="Below this |a| the inverse Langevin function skips the generalized W path",
    )

    # Logging
    log_level: str = Field(default="WARNING", description="Logging level")
    log_format: str = Field(default="text", description="Log format (json or text)")

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        """Only explicit keyword arguments configure the library."""
        return (init_settings,)

    @field_validator("default_tol", "series_rel_cutoff")
    @classmethod
    def validate_positive(cls, v: float) -> float:
        """Tolerances must be strictly positive."""
        if not v > 0.0:
            raise ValueError("Tolerance must be positive")
        return v

    @field_validator("log_format")
    @classmethod
    def validate_log_format(cls, v: str) -> str:
        """Validate log format value."""
        allowed = ["json", "text"]
        if v not in allowed:
            raise ValueError(f"Log format must be one of {allowed}")
        return v


@lru_cache()
def get_settings() -> Settings:
    """
    Get cached settings instance.

    Using lru_cache ensures the default settings are built once
    and reused by every service that is not handed its own copy.
    """
    return Settings()
