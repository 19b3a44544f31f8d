"""Three-parameter spectrum fit at fixed E_J*E_C."""

import time
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import minimize

from src.core.config import get_settings
from src.core.exceptions import ValidationError
from src.core.logging import elapsed_ms, get_logger
from src.schemas.circuit import MoleculeParams, TransitionLabel
from src.schemas.fitting import OBSERVABLE_LABELS, FitConfig, TransitionObservation
from src.services.fitting.objective import (
    ObservationSet,
    candidate_params,
    model_frequencies,
    objective,
)

logger = get_logger(__name__)

MIN_OBSERVATIONS = 4
MIN_FLUX_POINTS = 2
PENALTY_WEIGHT = 10.0


@dataclass(frozen=True)
class FitResult:
    """Fitted molecule and the quality of the fit."""

    params: MoleculeParams
    residual: float
    evaluations: int
    converged: bool
    ejec_product: float

    @property
    def ratio(self) -> float:
        """Fitted E_J / E_C."""
        return self.params.ratio


class _BoundedObjective:
    """Objective with out-of-bounds candidates clamped and penalized."""

    def __init__(
        self,
        config: FitConfig,
        observations: ObservationSet,
        basis_dim: int,
        threads: Optional[int],
    ):
        self.config = config
        self.observations = observations
        self.basis_dim = basis_dim
        self.threads = threads
        self.lower = np.array(config.bounds.lower())
        self.upper = np.array(config.bounds.upper())
        self.evaluations = 0

    def __call__(self, x: np.ndarray) -> float:
        self.evaluations += 1
        clamped = np.clip(x, self.lower, self.upper)
        excess = (x - clamped) / (self.upper - self.lower)
        value = objective(clamped, self.config, self.observations, self.basis_dim, self.threads)
        return value + PENALTY_WEIGHT * float(np.sum(excess**2))

    def clamp(self, x: np.ndarray) -> np.ndarray:
        return np.clip(x, self.lower, self.upper)


def _simplex(
    func: _BoundedObjective, start: np.ndarray, max_evals: int, tolerance: float
) -> tuple[np.ndarray, bool]:
    result = minimize(
        func,
        start,
        method="Nelder-Mead",
        options={
            "maxfev": max_evals,
            "fatol": tolerance,
            "xatol": np.inf,
            "adaptive": False,
        },
    )
    return func.clamp(result.x), bool(result.success)


def fit(
    config: FitConfig,
    data: Sequence[TransitionObservation],
    threads: Optional[int] = None,
) -> FitResult:
    """
    Fit (alpha, E_J/E_C, E_L) to labelled spectroscopy data.

    A Nelder-Mead simplex runs at ``config.basis_dim``; when
    ``config.polish_dim`` is larger a second simplex restarts from that
    optimum in the bigger basis. Both share the ``max_evals`` budget.
    alpha is reported non-negative since its sign does not change the
    spectrum, unless the alpha bounds exclude the mirrored value; the
    reported parameters always lie inside the bounds.

    Args:
        config: Fit configuration
        data: Observations
        threads: Worker cap for per-flux diagonalizations

    Returns:
        FitResult (converged=False when the budget ran out)

    Raises:
        ValidationError: If there are fewer than 4 observations or 2 flux points
    """
    if len(data) < MIN_OBSERVATIONS:
        raise ValidationError(
            f"Fit needs at least {MIN_OBSERVATIONS} observations, got {len(data)}"
        )
    observations = ObservationSet.from_observations(data)
    if observations.fluxes.size < MIN_FLUX_POINTS:
        raise ValidationError(
            f"Fit needs at least {MIN_FLUX_POINTS} distinct flux points, "
            f"got {observations.fluxes.size}"
        )

    start = time.perf_counter()
    logger.info(
        "fit_started",
        observations=len(observations),
        flux_points=int(observations.fluxes.size),
        ejec_product=config.ejec_product,
    )

    coarse = _BoundedObjective(config, observations, config.basis_dim, threads)
    x, converged = _simplex(
        coarse, np.array(config.initial.as_tuple()), config.max_evals, config.tolerance
    )
    evaluations = coarse.evaluations
    logger.info("fit_coarse_done", evaluations=evaluations, converged=converged)

    final_dim = config.basis_dim
    remaining = config.max_evals - evaluations
    if config.polish_dim > config.basis_dim:
        final_dim = config.polish_dim
        if remaining > 0:
            polish = _BoundedObjective(config, observations, final_dim, threads)
            x, polish_converged = _simplex(polish, x, remaining, config.tolerance)
            evaluations += polish.evaluations
            converged = polish_converged
        else:
            converged = False

    mirrored = abs(x[0])
    if coarse.lower[0] <= mirrored <= coarse.upper[0]:
        x[0] = mirrored
    residual = objective(x, config, observations, final_dim, threads)
    params = candidate_params(x, config.ejec_product)
    logger.info(
        "fit_completed",
        residual=residual,
        evaluations=evaluations,
        converged=converged,
        duration_ms=elapsed_ms(start),
    )
    return FitResult(
        params=params,
        residual=residual,
        evaluations=evaluations,
        converged=converged,
        ejec_product=config.ejec_product,
    )


def synthesize_observations(
    params: MoleculeParams,
    fluxes: Sequence[float],
    labels: Sequence[TransitionLabel | str] = (
        TransitionLabel.GE,
        TransitionLabel.GF,
        TransitionLabel.GH,
    ),
    basis_dim: Optional[int] = None,
    noise_ghz: float = 0.0,
    seed: Optional[int] = None,
) -> list[TransitionObservation]:
    """
    Model observations for every (flux, label) pair.

    Args:
        params: Generating parameters
        fluxes: Flux points in units of Phi0
        labels: Ground-state transitions to emit at each flux
        basis_dim: Truncation (defaults to settings.basis_dim)
        noise_ghz: Standard deviation of added Gaussian noise
        seed: Seed for the noise generator

    Returns:
        Observations ordered by flux, then label
    """
    labels = [TransitionLabel(label) for label in labels]
    if any(label not in OBSERVABLE_LABELS for label in labels):
        raise ValidationError("Only ground-state transitions can be synthesized")
    dim = get_settings().basis_dim if basis_dim is None else basis_dim
    skeleton = [
        TransitionObservation(phi_ext=float(p), frequency=1.0, label=label)
        for p in fluxes
        for label in labels
    ]
    observations = ObservationSet.from_observations(skeleton)
    frequencies = model_frequencies(params, observations, dim)
    if noise_ghz > 0:
        rng = np.random.default_rng(seed)
        frequencies = frequencies + rng.normal(0.0, noise_ghz, size=frequencies.size)
    frequencies = np.maximum(frequencies, 1e-6)
    return [
        obs.model_copy(update={"frequency": float(f)})
        for obs, f in zip(skeleton, frequencies)
    ]
