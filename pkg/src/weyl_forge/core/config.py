"""Application configuration management."""

from functools import lru_cache
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class ToleranceProfile(BaseModel):
    """Numerical tolerances threaded through construction and verification."""

    model_config = ConfigDict(frozen=True)

    eq_tol: float = Field(default=1e-9, gt=0.0, description="Root equality")
    zero_tol: float = Field(default=1e-8, gt=0.0, description="Inertia zero band")
    spectrum_tol: float = Field(default=1e-6, gt=0.0)
    decomp_tol: float = Field(default=1e-9, gt=0.0)
    match_tol: float = Field(default=1e-6, gt=0.0)
    align_tol: float = Field(default=1e-8, gt=0.0)
    eigen_tol: float = Field(default=1e-12, gt=0.0)
    max_sweeps: int = Field(default=50, ge=1, le=1000)
    clamp_tol: float = Field(default=1e-10, gt=0.0)
    bisect_max_iter: int = Field(default=200, ge=1)
    bisect_rel_width: float = Field(default=1e-13, gt=0.0)


DEFAULT_TOLERANCES = ToleranceProfile()


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    log_level: str = Field(
        default="WARNING", pattern="^(DEBUG|INFO|WARNING|ERROR|CRITICAL)$"
    )
    log_format: str = Field(default="console", pattern="^(console|json)$")
    seed: int = Field(default=0, ge=0)

    tolerances: ToleranceProfile = Field(
        default=None, validate_default=True  # type: ignore[arg-type]
    )

    model_config = SettingsConfigDict(
        env_prefix="WEYL_FORGE_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
    )

    @field_validator("tolerances", mode="before")
    @classmethod
    def parse_tolerances(cls, v: Any) -> ToleranceProfile:
        if v is None:
            return DEFAULT_TOLERANCES
        if isinstance(v, dict):
            return ToleranceProfile(**v)
        return v


@lru_cache()
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()
