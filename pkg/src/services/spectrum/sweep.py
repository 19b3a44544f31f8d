"""Flux sweeps and truncation convergence checks."""

import time
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, TypeVar

import numpy as np

from src.core.config import get_settings
from src.core.exceptions import FluxMolBaseException, ValidationError
from src.core.logging import elapsed_ms, get_logger
from src.quantum.operators import ModeBasis, cosine_phase_op, phase_squared_op
from src.schemas.circuit import FluxPoint, MoleculeParams, TransitionLabel
from src.services.circuit.hamiltonian import molecule_basis
from src.services.spectrum.diagonalization import Spectrum, solve

logger = get_logger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(
    func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None
) -> list[R]:
    """
    Apply ``func`` to every item, in parallel threads, keeping input order.

    Args:
        func: Function of one item
        items: Inputs
        threads: Worker cap (defaults to settings.threads)

    Returns:
        Results in input order
    """
    items = list(items)
    workers = min(threads or get_settings().threads, max(len(items), 1))
    if workers <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))


@dataclass(frozen=True)
class SweepResult:
    """Spectra along a flux axis; failed points hold ``None`` and converged=False."""

    flux_axis: np.ndarray
    spectra: list[Optional[Spectrum]]
    converged: np.ndarray
    errors: dict[int, str]

    def __len__(self) -> int:
        return len(self.flux_axis)

    def curve(self, label: TransitionLabel | str) -> np.ndarray:
        """Transition frequency along the sweep (NaN at failed points)."""
        label = TransitionLabel(label)
        return np.array(
            [
                s.transition(label) if s is not None else np.nan
                for s in self.spectra
            ]
        )


def _warm(basis: ModeBasis) -> None:
    # Populate the operator caches once before worker threads share them
    cosine_phase_op(basis)
    phase_squared_op(basis)


def flux_sweep(
    params: MoleculeParams,
    flux_grid: Sequence[float] | np.ndarray,
    basis: Optional[ModeBasis] = None,
    k: Optional[int] = None,
    threads: Optional[int] = None,
) -> SweepResult:
    """
    Diagonalize at every flux point.

    Points are independent and run on a thread pool; a failing point is
    flagged instead of aborting the sweep.

    Args:
        params: Circuit energies and asymmetry
        flux_grid: Flux values (units of Phi0)
        basis: Per-mode basis (defaults to :func:`molecule_basis`)
        k: Levels per point (defaults to settings.eigen_count)
        threads: Worker cap (defaults to settings.threads)

    Returns:
        SweepResult in flux-grid order

    Raises:
        ValidationError: If the grid is empty or not finite
    """
    flux_axis = np.asarray(flux_grid, dtype=float).ravel()
    if flux_axis.size == 0:
        raise ValidationError("Flux grid is empty")
    if not np.all(np.isfinite(flux_axis)):
        raise ValidationError("Flux grid contains non-finite values")

    basis = molecule_basis(params) if basis is None else basis
    _warm(basis)
    start = time.perf_counter()
    logger.info("sweep_started", points=int(flux_axis.size), dim=basis.dim)

    def run(phi_ext: float) -> tuple[Optional[Spectrum], Optional[str]]:
        try:
            return solve(params, FluxPoint(phi_ext=phi_ext), basis, k), None
        except FluxMolBaseException as e:
            return None, e.message

    outcomes = map_ordered(run, (float(p) for p in flux_axis), threads)
    spectra = [spectrum for spectrum, _ in outcomes]
    errors = {i: message for i, (_, message) in enumerate(outcomes) if message is not None}
    for i, message in errors.items():
        logger.warning("sweep_point_failed", phi_ext=float(flux_axis[i]), error=message)

    logger.info(
        "sweep_completed",
        points=int(flux_axis.size),
        failed=len(errors),
        duration_ms=elapsed_ms(start),
    )
    return SweepResult(
        flux_axis=flux_axis,
        spectra=spectra,
        converged=np.array([s is not None for s in spectra]),
        errors=errors,
    )


@dataclass(frozen=True)
class ConvergenceReport:
    """f_ge at each truncation and whether the last step settled."""

    dims: list[int]
    f_ge: list[float]
    relative_changes: list[float]
    rtol: float

    @property
    def converged(self) -> bool:
        """True when the last successive relative change is below ``rtol``."""
        return bool(self.relative_changes) and self.relative_changes[-1] < self.rtol

    def rows(self) -> list[tuple[int, float]]:
        """(dim, f_ge) pairs."""
        return list(zip(self.dims, self.f_ge))


def convergence_check(
    params: MoleculeParams,
    flux: FluxPoint | float,
    dims: Sequence[int],
    rtol: Optional[float] = None,
) -> ConvergenceReport:
    """
    Track f_ge as the per-mode truncation grows.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        dims: Ascending truncations, at least two
        rtol: Relative change accepted as converged (defaults to settings)

    Returns:
        ConvergenceReport

    Raises:
        ValidationError: If fewer than two dims are given or they are not ascending
    """
    dims = [int(d) for d in dims]
    if len(dims) < 2:
        raise ValidationError("convergence_check needs at least two truncations")
    if any(b <= a for a, b in zip(dims, dims[1:])):
        raise ValidationError(f"Truncations must be strictly ascending, got {dims}")
    rtol = get_settings().convergence_rtol if rtol is None else rtol

    values = [solve(params, flux, molecule_basis(params, dim), k=2).f_ge for dim in dims]
    changes = [abs(b - a) / max(abs(b), 1e-300) for a, b in zip(values, values[1:])]
    report = ConvergenceReport(dims=dims, f_ge=values, relative_changes=changes, rtol=rtol)
    if not report.converged:
        logger.warning(
            "truncation_not_converged", dims=dims, last_change=changes[-1], rtol=rtol
        )
    return report
