"""Application configuration using Pydantic settings."""

from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings loaded from environment variables (prefix FLUXMOL_)."""

    model_config = SettingsConfigDict(
        env_prefix="FLUXMOL_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application Settings
    app_name: str = Field(default="fluxmol", description="Application name")
    log_level: str = Field(default="WARNING", description="Logging level")
    log_file: Optional[str] = Field(default=None, description="Optional JSON log file")

    # Parallelism
    threads: int = Field(
        default=4, ge=1, description="Maximum worker threads for sweeps and fits"
    )

    # Basis truncation
    basis_dim: int = Field(default=30, ge=2, description="Oscillator levels per mode")
    basis_pad: int = Field(
        default=8, ge=0, description="Oversize margin used when building cos(phi)"
    )
    eigen_count: int = Field(default=8, ge=1, description="Eigenvalues kept per point")
    hermiticity_atol: float = Field(
        default=1e-9, gt=0, description="Entrywise asymmetry tolerated by the eigensolver"
    )
    convergence_rtol: float = Field(
        default=1e-4, gt=0, description="Relative f_ge change accepted as converged"
    )

    # Finite differences
    flux_step: float = Field(default=1e-4, gt=0, description="Flux step in units of Phi0")
    alpha_step: float = Field(default=1e-5, gt=0, description="Step in alpha/2")
    energy_rel_step: float = Field(
        default=1e-4, gt=0, description="Relative step for d f / d ln E"
    )

    # Fitting
    fit_basis_dim: int = Field(default=20, ge=2, description="Basis used while fitting")
    polish_basis_dim: int = Field(default=30, ge=2, description="Basis for the final polish")
    fit_max_evals: int = Field(default=600, ge=1, description="Objective evaluation budget")

    # Noise
    f_ir: float = Field(default=1.0, gt=0, description="Infrared cutoff in Hz")

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Validate log level is valid."""
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Invalid log level. Must be one of {valid_levels}")
        return v.upper()


@lru_cache
def get_settings() -> Settings:
    """
    Get cached engine settings.

    Returns:
        Settings instance
    """
    return Settings()
