"""Spectrum fitting at fixed E_J*E_C."""

from src.services.fitting.fitter import FitResult, fit, synthesize_observations
from src.services.fitting.objective import SENTINEL_RESIDUAL, ObservationSet, objective

__all__ = [
    "SENTINEL_RESIDUAL",
    "FitResult",
    "ObservationSet",
    "fit",
    "objective",
    "synthesize_observations",
]
