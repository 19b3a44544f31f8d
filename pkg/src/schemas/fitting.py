"""Pydantic schemas for spectroscopy data and the spectrum fit."""

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.schemas.circuit import TransitionLabel

OBSERVABLE_LABELS = (
    TransitionLabel.GE,
    TransitionLabel.GF,
    TransitionLabel.GH,
    TransitionLabel.GD,
)


class TransitionObservation(BaseModel):
    """One measured spectroscopy point."""

    model_config = ConfigDict(frozen=True)

    phi_ext: float = Field(..., description="Applied flux in units of Phi0")
    frequency: float = Field(..., gt=0.0, description="Measured frequency in GHz")
    label: TransitionLabel = Field(..., description="Transition out of the ground state")
    weight: float = Field(default=1.0, ge=0.0, description="Relative weight")

    @field_validator("phi_ext", "frequency", "weight")
    @classmethod
    def validate_finite(cls, v: float) -> float:
        """Reject NaN and infinities."""
        if not math.isfinite(v):
            raise ValueError("must be finite")
        return v

    @field_validator("label")
    @classmethod
    def validate_label(cls, v: TransitionLabel) -> TransitionLabel:
        """Only ground-state transitions are observable inputs."""
        if v not in OBSERVABLE_LABELS:
            raise ValueError(
                f"label must be one of {[label.value for label in OBSERVABLE_LABELS]}"
            )
        return v


class FitParameters(BaseModel):
    """The three fitted quantities."""

    model_config = ConfigDict(frozen=True)

    alpha: float
    ratio: float = Field(..., gt=0.0, description="E_J / E_C")
    e_l: float = Field(..., gt=0.0, description="Inductive energy in GHz")

    def as_tuple(self) -> tuple[float, float, float]:
        """(alpha, ratio, e_l)."""
        return (self.alpha, self.ratio, self.e_l)


class FitBounds(BaseModel):
    """Closed intervals for the fitted quantities."""

    model_config = ConfigDict(frozen=True)

    alpha: tuple[float, float] = (-0.5, 0.5)
    ratio: tuple[float, float] = (0.5, 20.0)
    e_l: tuple[float, float] = (0.05, 10.0)

    @model_validator(mode="after")
    def validate_ordered(self) -> "FitBounds":
        """Each interval must be non-empty."""
        for name in ("alpha", "ratio", "e_l"):
            low, high = getattr(self, name)
            if not low < high:
                raise ValueError(f"bounds for {name} must satisfy low < high")
        return self

    def lower(self) -> tuple[float, float, float]:
        """Lower corner."""
        return (self.alpha[0], self.ratio[0], self.e_l[0])

    def upper(self) -> tuple[float, float, float]:
        """Upper corner."""
        return (self.alpha[1], self.ratio[1], self.e_l[1])


class FitConfig(BaseModel):
    """Configuration of a spectrum fit at fixed E_J*E_C."""

    model_config = ConfigDict(frozen=True)

    ejec_product: float = Field(..., gt=0.0, description="Fixed E_J*E_C in GHz^2")
    initial: FitParameters
    bounds: FitBounds = Field(default_factory=FitBounds)
    basis_dim: int = Field(default=20, ge=2, description="Basis used while fitting")
    polish_dim: int = Field(default=30, ge=2, description="Basis for the final polish")
    max_evals: int = Field(default=600, ge=1, description="Objective evaluation budget")
    tolerance: float = Field(
        default=1e-6, gt=0.0, description="Simplex residual spread treated as converged"
    )

    @model_validator(mode="after")
    def validate_initial_inside_bounds(self) -> "FitConfig":
        """Bounds must contain the starting point."""
        for name, value in zip(("alpha", "ratio", "e_l"), self.initial.as_tuple()):
            low, high = getattr(self.bounds, name)
            if not low <= value <= high:
                raise ValueError(f"initial {name}={value} lies outside [{low}, {high}]")
        return self
