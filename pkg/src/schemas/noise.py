"""Pydantic schemas for noise models and the readout antenna."""

import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class FormulaMode(str, Enum):
    """How the 1/f amplitude enters the Ramsey rate."""

    # amplitude inside the square root, sqrt(A * eta)
    LITERAL = "paper-literal"
    # dimensionally homogeneous A * sqrt(eta)
    CONVENTIONAL = "conventional"

    @classmethod
    def _missing_(cls, value: object) -> Optional["FormulaMode"]:
        if isinstance(value, str) and value.lower() == "literal":
            return cls.LITERAL
        return None


class CriticalCurrentTarget(str, Enum):
    """Which junctions carry the critical-current fluctuation."""

    SMALL_JUNCTION = "small-junction"
    ARRAY = "array"


class FluxNoiseModel(BaseModel):
    """1/f flux noise amplitudes (units of Phi0) and infrared cutoff."""

    model_config = ConfigDict(frozen=True)

    a_com: float = Field(default=0.0, ge=0.0, description="Common-mode amplitude")
    a_diff: float = Field(default=0.0, ge=0.0, description="Differential-mode amplitude")
    f_ir: float = Field(default=1.0, gt=0.0, description="Infrared cutoff in Hz")


class AntennaConfig(BaseModel):
    """Readout antenna parameters."""

    model_config = ConfigDict(frozen=True)

    f_a: float = Field(..., gt=0.0, description="Resonant frequency in GHz")
    kappa_over_2pi: float = Field(..., gt=0.0, description="Linewidth in MHz")
    chi_over_2pi: Optional[float] = Field(
        default=None, ge=0.0, description="Dispersive shift of f_ge per photon in MHz"
    )
    n_bar: Optional[float] = Field(
        default=None, ge=0.0, description="Mean residual photon number"
    )

    @property
    def kappa(self) -> float:
        """Linewidth in rad/s."""
        return 2.0e6 * math.pi * self.kappa_over_2pi

    @property
    def chi(self) -> Optional[float]:
        """Dispersive shift in rad/s, if configured."""
        if self.chi_over_2pi is None:
            return None
        return 2.0e6 * math.pi * self.chi_over_2pi
