"""Classical potential landscape of the molecule and its local minima."""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.ndimage import minimum_filter
from scipy.optimize import minimize

from src.core.exceptions import ValidationError
from src.core.logging import get_logger
from src.schemas.circuit import FluxPoint, GridSpec, MoleculeParams
from src.services.circuit.hamiltonian import loop_phases

logger = get_logger(__name__)

DUPLICATE_TOL = 1e-6
DEGENERACY_TOL = 1e-6
REFINE_TOL = 1e-12


@dataclass(frozen=True)
class PotentialGrid:
    """U(phi1, phi2) sampled on a rectangular grid; values[i, j] = U(phi1[i], phi2[j])."""

    phi1_axis: np.ndarray
    phi2_axis: np.ndarray
    values: np.ndarray

    @property
    def minimum(self) -> float:
        """Smallest sampled value in GHz."""
        return float(self.values.min())


@dataclass(frozen=True)
class PotentialMinimum:
    """A refined local minimum of U."""

    phi1: float
    phi2: float
    u: float
    hessian: np.ndarray = field(repr=False, compare=False)

    def as_tuple(self) -> tuple[float, float, float]:
        """(phi1, phi2, U)."""
        return (self.phi1, self.phi2, self.u)


def potential_energy(
    params: MoleculeParams,
    flux: FluxPoint | float,
    phi1: np.ndarray | float,
    phi2: np.ndarray | float,
) -> np.ndarray | float:
    """
    Classical potential (charging term omitted), in GHz.

    U = (E_L/3)(phi1^2 + phi2^2 + phi1 phi2)
        - E_J cos(phi1 - theta1) - E_J cos(phi2 - theta2)
    """
    theta1, theta2 = loop_phases(params, flux)
    return (params.e_l / 3.0) * (phi1**2 + phi2**2 + phi1 * phi2) - params.e_j * (
        np.cos(phi1 - theta1) + np.cos(phi2 - theta2)
    )


def potential_hessian(
    params: MoleculeParams, flux: FluxPoint | float, phi1: float, phi2: float
) -> np.ndarray:
    """Analytic curvature matrix of U at (phi1, phi2)."""
    theta1, theta2 = loop_phases(params, flux)
    diag = 2.0 * params.e_l / 3.0
    off = params.e_l / 3.0
    return np.array(
        [
            [diag + params.e_j * math.cos(phi1 - theta1), off],
            [off, diag + params.e_j * math.cos(phi2 - theta2)],
        ]
    )


def potential_landscape(
    params: MoleculeParams, flux: FluxPoint | float, grid_spec: Optional[GridSpec] = None
) -> PotentialGrid:
    """
    Evaluate U on a grid.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        grid_spec: Grid description (defaults to [-2pi, 2pi]^2, 201 x 201)

    Returns:
        PotentialGrid

    Raises:
        ValidationError: If the grid is empty or malformed
    """
    grid_spec = grid_spec or GridSpec()
    phi1_axis, phi2_axis = grid_spec.axes()
    p1, p2 = np.meshgrid(phi1_axis, phi2_axis, indexing="ij")
    values = np.asarray(potential_energy(params, flux, p1, p2), dtype=float)
    return PotentialGrid(phi1_axis=phi1_axis, phi2_axis=phi2_axis, values=values)


def classical_minima(
    params: MoleculeParams,
    flux: FluxPoint | float,
    search_box: Optional[GridSpec] = None,
) -> list[PotentialMinimum]:
    """
    Find all local minima of U inside the search box.

    Grid points that are minimal in their 3 x 3 neighbourhood seed a
    derivative-free Powell refinement; refined points closer than 1e-6 rad
    are merged.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        search_box: Seed grid; must contain [-2pi, 2pi]^2

    Returns:
        Minima sorted by U (lowest first)

    Raises:
        ValidationError: If the search box does not cover [-2pi, 2pi]^2
    """
    search_box = search_box or GridSpec()
    if not search_box.covers(2.0 * math.pi):
        raise ValidationError("Search box must cover at least [-2pi, 2pi]^2")

    grid = potential_landscape(params, flux, search_box)
    mask = minimum_filter(grid.values, size=3, mode="nearest") == grid.values
    seeds = np.argwhere(mask)

    def objective(x: np.ndarray) -> float:
        return float(potential_energy(params, flux, x[0], x[1]))

    span = max(
        search_box.phi1_max - search_box.phi1_min, search_box.phi2_max - search_box.phi2_min
    )
    step = span / max(search_box.points1 - 1, search_box.points2 - 1, 1)

    minima: list[PotentialMinimum] = []
    for i, j in seeds:
        x0 = np.array([grid.phi1_axis[i], grid.phi2_axis[j]])
        result = minimize(
            objective,
            x0,
            method="Powell",
            options={"xtol": REFINE_TOL, "ftol": REFINE_TOL, "maxfev": 20000},
        )
        phi1, phi2 = (float(v) for v in result.x)
        if not (
            search_box.phi1_min - step <= phi1 <= search_box.phi1_max + step
            and search_box.phi2_min - step <= phi2 <= search_box.phi2_max + step
        ):
            continue
        hessian = potential_hessian(params, flux, phi1, phi2)
        if np.any(np.linalg.eigvalsh(hessian) <= 0):
            continue
        if any(
            math.hypot(phi1 - m.phi1, phi2 - m.phi2) < DUPLICATE_TOL for m in minima
        ):
            continue
        minima.append(PotentialMinimum(phi1, phi2, float(result.fun), hessian))

    minima.sort(key=lambda m: (m.u, m.phi1, m.phi2))
    logger.debug("classical_minima", seeds=len(seeds), minima=len(minima))
    return minima


def lowest_wells(
    minima: list[PotentialMinimum], tol: float = DEGENERACY_TOL
) -> list[PotentialMinimum]:
    """Minima degenerate with the global minimum within ``tol`` GHz."""
    if not minima:
        return []
    floor = minima[0].u
    return [m for m in minima if m.u - floor <= tol]


def critical_flux(
    params: MoleculeParams,
    bracket: tuple[float, float] = (0.05, 0.5),
    tol: float = 1e-3,
    search_box: Optional[GridSpec] = None,
) -> float:
    """
    Flux at which the lowest well splits into two degenerate wells.

    Bisection on the number of degenerate lowest wells (1 below, >= 2 above).

    Args:
        params: Circuit energies (asymmetry should be zero for exact degeneracy)
        bracket: Flux interval with one well at the left end and two at the right
        tol: Flux resolution in units of Phi0
        search_box: Seed grid forwarded to :func:`classical_minima`

    Returns:
        Critical flux in units of Phi0

    Raises:
        ValidationError: If the bracket does not straddle the transition
    """

    def wells(phi_ext: float) -> int:
        return len(lowest_wells(classical_minima(params, phi_ext, search_box)))

    low, high = bracket
    if wells(low) != 1 or wells(high) < 2:
        raise ValidationError(
            f"Bracket {bracket} does not straddle the single-to-double well transition"
        )
    while high - low > tol:
        mid = 0.5 * (low + high)
        if wells(mid) == 1:
            low = mid
        else:
            high = mid
    return 0.5 * (low + high)
