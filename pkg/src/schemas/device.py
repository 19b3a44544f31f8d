"""Device configuration schema assembled from a config file."""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from src.schemas.circuit import MoleculeParams
from src.schemas.noise import AntennaConfig, FluxNoiseModel


class DeviceConfig(BaseModel):
    """Everything needed to run a command against one device."""

    model_config = ConfigDict(frozen=True)

    name: str = Field(default="device", min_length=1)
    params: MoleculeParams
    basis_dim: int = Field(default=30, ge=2)
    noise: FluxNoiseModel = Field(default_factory=FluxNoiseModel)
    antenna: Optional[AntennaConfig] = None

    def with_basis_dim(self, basis_dim: Optional[int]) -> "DeviceConfig":
        """Return a copy with the basis overridden (None keeps the current one)."""
        if basis_dim is None:
            return self
        return self.model_copy(update={"basis_dim": basis_dim})
