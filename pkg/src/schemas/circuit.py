"""Pydantic schemas describing the molecule circuit and its flux bias."""

import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.core.exceptions import ValidationError


class TransitionLabel(str, Enum):
    """Labeled transitions out of the ground state (plus e->f)."""

    GE = "ge"
    GF = "gf"
    GH = "gh"
    GD = "gd"
    EF = "ef"

    @property
    def levels(self) -> tuple[int, int]:
        """Lower and upper level indices of the transition."""
        return _LABEL_LEVELS[self]


_LABEL_LEVELS = {
    TransitionLabel.GE: (0, 1),
    TransitionLabel.GF: (0, 2),
    TransitionLabel.GH: (0, 3),
    TransitionLabel.GD: (0, 4),
    TransitionLabel.EF: (1, 2),
}


class MoleculeParams(BaseModel):
    """Circuit energies (GHz, E/h convention) and loop flux asymmetry."""

    model_config = ConfigDict(frozen=True)

    e_j: float = Field(..., ge=0.0, description="Josephson energy per small junction")
    e_c: float = Field(..., gt=0.0, description="Charging energy per junction")
    e_l: float = Field(..., gt=0.0, description="Inductive energy per superinductance")
    alpha: float = Field(default=0.0, gt=-1.0, lt=1.0, description="Flux asymmetry")

    @field_validator("e_j", "e_c", "e_l", "alpha")
    @classmethod
    def validate_finite(cls, v: float) -> float:
        """Reject NaN and infinities."""
        if not math.isfinite(v):
            raise ValueError("must be finite")
        return v

    @property
    def ejec_product(self) -> float:
        """E_J * E_C in GHz^2."""
        return self.e_j * self.e_c

    @property
    def ratio(self) -> float:
        """E_J / E_C."""
        return self.e_j / self.e_c

    @classmethod
    def from_ratio(
        cls, ejec_product: float, ratio: float, e_l: float, alpha: float = 0.0
    ) -> "MoleculeParams":
        """
        Rebuild energies from a fixed E_J*E_C product and the E_J/E_C ratio.

        Args:
            ejec_product: E_J * E_C in GHz^2
            ratio: E_J / E_C
            e_l: Inductive energy in GHz
            alpha: Flux asymmetry

        Returns:
            MoleculeParams instance
        """
        return cls(
            e_j=math.sqrt(ejec_product * ratio),
            e_c=math.sqrt(ejec_product / ratio),
            e_l=e_l,
            alpha=alpha,
        )


class FluxPoint(BaseModel):
    """Applied external flux in units of the flux quantum."""

    model_config = ConfigDict(frozen=True)

    phi_ext: float = Field(..., description="Phi_ext / Phi0")

    @field_validator("phi_ext")
    @classmethod
    def validate_finite(cls, v: float) -> float:
        """Reject NaN and infinities."""
        if not math.isfinite(v):
            raise ValueError("phi_ext must be finite")
        return v


def as_flux_point(flux: "FluxPoint | float") -> FluxPoint:
    """Accept either a FluxPoint or a bare flux value."""
    if isinstance(flux, FluxPoint):
        return flux
    return FluxPoint(phi_ext=float(flux))


class GridSpec(BaseModel):
    """Rectangular (phi1, phi2) grid in radians."""

    model_config = ConfigDict(frozen=True)

    phi1_min: float = -2.0 * math.pi
    phi1_max: float = 2.0 * math.pi
    phi2_min: float = -2.0 * math.pi
    phi2_max: float = 2.0 * math.pi
    points1: int = 201
    points2: int = 201

    @classmethod
    def square(cls, half_width: float, points: int) -> "GridSpec":
        """Symmetric square grid [-half_width, half_width]^2."""
        return cls(
            phi1_min=-half_width,
            phi1_max=half_width,
            phi2_min=-half_width,
            phi2_max=half_width,
            points1=points,
            points2=points,
        )

    def axes(self) -> tuple[np.ndarray, np.ndarray]:
        """
        Build both axes.

        Returns:
            Tuple of (phi1_axis, phi2_axis)

        Raises:
            ValidationError: If the grid is empty, non-finite or not increasing
        """
        if self.points1 < 1 or self.points2 < 1:
            raise ValidationError(
                f"Empty grid: {self.points1}x{self.points2} points requested"
            )
        bounds = (self.phi1_min, self.phi1_max, self.phi2_min, self.phi2_max)
        if not all(math.isfinite(b) for b in bounds):
            raise ValidationError("Grid bounds must be finite")
        if (self.points1 > 1 and self.phi1_max <= self.phi1_min) or (
            self.points2 > 1 and self.phi2_max <= self.phi2_min
        ):
            raise ValidationError("Grid axes must be strictly increasing")
        return (
            np.linspace(self.phi1_min, self.phi1_max, self.points1),
            np.linspace(self.phi2_min, self.phi2_max, self.points2),
        )

    def covers(self, half_width: float) -> bool:
        """Whether the grid contains the square [-half_width, half_width]^2."""
        tol = 1e-12
        return (
            self.phi1_min <= -half_width + tol
            and self.phi1_max >= half_width - tol
            and self.phi2_min <= -half_width + tol
            and self.phi2_max >= half_width - tol
        )
