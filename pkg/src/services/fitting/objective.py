"""Weighted RMS residual between modelled and observed transitions."""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pydantic

from src.core.exceptions import FluxMolBaseException, ValidationError
from src.core.logging import get_logger
from src.schemas.circuit import MoleculeParams
from src.schemas.fitting import FitConfig, TransitionObservation
from src.services.circuit.hamiltonian import molecule_basis
from src.services.spectrum.diagonalization import solve
from src.services.spectrum.sweep import map_ordered

logger = get_logger(__name__)

SENTINEL_RESIDUAL = 1e6


@dataclass(frozen=True)
class ObservationSet:
    """Observations grouped by flux so each flux point is diagonalized once."""

    fluxes: np.ndarray
    groups: list[np.ndarray]
    levels: np.ndarray
    frequencies: np.ndarray
    weights: np.ndarray
    # canonical (flux, level, frequency, weight) order for residual sums
    order: np.ndarray

    @classmethod
    def from_observations(cls, data: Sequence[TransitionObservation]) -> "ObservationSet":
        """
        Index observations by flux.

        Raises:
            ValidationError: If data is empty or all weights are zero
        """
        if not data:
            raise ValidationError("No observations")
        weights = np.array([o.weight for o in data], dtype=float)
        if weights.sum() <= 0:
            raise ValidationError("Observation weights sum to zero")
        phi = np.array([o.phi_ext for o in data], dtype=float)
        levels = np.array([o.label.levels[1] for o in data])
        frequencies = np.array([o.frequency for o in data], dtype=float)
        fluxes, inverse = np.unique(phi, return_inverse=True)
        return cls(
            fluxes=fluxes,
            groups=[np.flatnonzero(inverse == i) for i in range(fluxes.size)],
            levels=levels,
            frequencies=frequencies,
            weights=weights,
            order=np.lexsort((weights, frequencies, levels, phi)),
        )

    def __len__(self) -> int:
        return self.frequencies.size


def candidate_params(candidate: Sequence[float], ejec_product: float) -> MoleculeParams:
    """MoleculeParams from (alpha, E_J/E_C, E_L) at fixed E_J*E_C."""
    alpha, ratio, e_l = (float(v) for v in candidate)
    return MoleculeParams.from_ratio(ejec_product, ratio, e_l, alpha)


def model_frequencies(
    params: MoleculeParams,
    observations: ObservationSet,
    basis_dim: int,
    threads: Optional[int] = None,
) -> np.ndarray:
    """Modelled frequency for every observation, in observation order."""
    basis = molecule_basis(params, basis_dim)
    k = int(observations.levels.max()) + 1
    modelled = np.empty(len(observations))

    def levels_at(phi_ext: float) -> np.ndarray:
        return solve(params, phi_ext, basis, k).levels

    spectra = map_ordered(levels_at, (float(p) for p in observations.fluxes), threads)
    for group, levels in zip(observations.groups, spectra):
        modelled[group] = levels[observations.levels[group]]
    return modelled


def objective(
    candidate: Sequence[float],
    config: FitConfig,
    data: Sequence[TransitionObservation] | ObservationSet,
    basis_dim: Optional[int] = None,
    threads: Optional[int] = None,
) -> float:
    """
    Weighted RMS residual sqrt(sum w (f_model - f_obs)^2 / sum w) in GHz.

    Any diagonalization failure or unphysical candidate yields 1e6 GHz so the
    optimizer can retreat.

    Args:
        candidate: (alpha, E_J/E_C, E_L)
        config: Fit configuration carrying the E_J*E_C product
        data: Observations or a prepared ObservationSet
        basis_dim: Truncation (defaults to config.basis_dim)
        threads: Worker cap for the per-flux diagonalizations

    Returns:
        Residual in GHz
    """
    observations = (
        data if isinstance(data, ObservationSet) else ObservationSet.from_observations(data)
    )
    dim = config.basis_dim if basis_dim is None else basis_dim
    try:
        params = candidate_params(candidate, config.ejec_product)
        modelled = model_frequencies(params, observations, dim, threads)
    except (FluxMolBaseException, pydantic.ValidationError, np.linalg.LinAlgError) as e:
        logger.debug("objective_sentinel", candidate=list(candidate), error=str(e))
        return SENTINEL_RESIDUAL
    if not np.all(np.isfinite(modelled)):
        return SENTINEL_RESIDUAL
    order = observations.order
    w = observations.weights[order]
    squares = w * (modelled[order] - observations.frequencies[order]) ** 2
    return math.sqrt(float(np.sum(squares) / np.sum(w)))
