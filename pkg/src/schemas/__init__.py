"""Pydantic schemas shared across services and the CLI."""

from src.schemas.circuit import (
    FluxPoint,
    GridSpec,
    MoleculeParams,
    TransitionLabel,
    as_flux_point,
)
from src.schemas.device import DeviceConfig
from src.schemas.fitting import (
    FitBounds,
    FitConfig,
    FitParameters,
    TransitionObservation,
)
from src.schemas.noise import (
    AntennaConfig,
    CriticalCurrentTarget,
    FluxNoiseModel,
    FormulaMode,
)

__all__ = [
    "AntennaConfig",
    "CriticalCurrentTarget",
    "DeviceConfig",
    "FitBounds",
    "FitConfig",
    "FitParameters",
    "FluxNoiseModel",
    "FluxPoint",
    "FormulaMode",
    "GridSpec",
    "MoleculeParams",
    "TransitionLabel",
    "TransitionObservation",
    "as_flux_point",
]
