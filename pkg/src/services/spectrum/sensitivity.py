"""Finite-difference sensitivities of transition frequencies and the sweet spot."""

from typing import Literal, Optional

import numpy as np
from scipy.optimize import minimize_scalar

from src.core.config import get_settings
from src.core.exceptions import ValidationError
from src.quantum.operators import ModeBasis
from src.schemas.circuit import FluxPoint, MoleculeParams, TransitionLabel, as_flux_point
from src.services.circuit.hamiltonian import molecule_basis
from src.services.spectrum.diagonalization import solve

EnergyName = Literal["e_j", "e_l"]


def transition_frequency(
    params: MoleculeParams,
    flux: FluxPoint | float,
    basis: Optional[ModeBasis] = None,
    label: TransitionLabel | str = TransitionLabel.GE,
) -> float:
    """
    One labelled transition frequency in GHz.

    Only the levels the label needs are computed.
    """
    label = TransitionLabel(label)
    basis = molecule_basis(params) if basis is None else basis
    return solve(params, flux, basis, k=label.levels[1] + 1).transition(label)


def flux_sensitivity(
    params: MoleculeParams,
    flux: FluxPoint | float,
    basis: Optional[ModeBasis] = None,
    label: TransitionLabel | str = TransitionLabel.GE,
    step: Optional[float] = None,
) -> float:
    """
    Central difference of a transition frequency in Phi_ext.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        basis: Per-mode basis (defaults to :func:`molecule_basis`)
        label: Transition
        step: Flux step (defaults to settings.flux_step, 1e-4 Phi0)

    Returns:
        d f / d Phi_ext in GHz per Phi0
    """
    step = get_settings().flux_step if step is None else step
    basis = molecule_basis(params) if basis is None else basis
    phi_ext = as_flux_point(flux).phi_ext
    upper = transition_frequency(params, phi_ext + step, basis, label)
    lower = transition_frequency(params, phi_ext - step, basis, label)
    return (upper - lower) / (2.0 * step)


def asymmetry_sensitivity(
    params: MoleculeParams,
    flux: FluxPoint | float,
    basis: Optional[ModeBasis] = None,
    label: TransitionLabel | str = TransitionLabel.GE,
    step: Optional[float] = None,
) -> float:
    """
    Central difference of a transition frequency in alpha/2.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        basis: Per-mode basis (defaults to :func:`molecule_basis`)
        label: Transition
        step: Step in alpha/2 (defaults to settings.alpha_step, 1e-5)

    Returns:
        d f / d(alpha/2) in GHz

    Raises:
        ValidationError: If alpha +/- 2 step leaves (-1, 1)
    """
    step = get_settings().alpha_step if step is None else step
    basis = molecule_basis(params) if basis is None else basis
    if abs(params.alpha) + 2.0 * step >= 1.0:
        raise ValidationError(f"alpha={params.alpha} too close to +/-1 for step {step}")
    plus = params.model_copy(update={"alpha": params.alpha + 2.0 * step})
    minus = params.model_copy(update={"alpha": params.alpha - 2.0 * step})
    upper = transition_frequency(plus, flux, basis, label)
    lower = transition_frequency(minus, flux, basis, label)
    return (upper - lower) / (2.0 * step)


def energy_sensitivity(
    params: MoleculeParams,
    flux: FluxPoint | float,
    energy: EnergyName,
    basis: Optional[ModeBasis] = None,
    label: TransitionLabel | str = TransitionLabel.GE,
    rel_step: Optional[float] = None,
) -> float:
    """
    Logarithmic derivative d f / d ln E for E = E_J or E_L.

    E_J is varied on both small junctions together. The basis is fixed by the
    nominal parameters so that only the Hamiltonian changes.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        energy: "e_j" or "e_l"
        basis: Per-mode basis (defaults to :func:`molecule_basis`)
        label: Transition
        rel_step: Relative step (defaults to settings.energy_rel_step, 1e-4)

    Returns:
        d f / d ln E in GHz
    """
    if energy not in ("e_j", "e_l"):
        raise ValidationError(f"energy must be 'e_j' or 'e_l', got {energy!r}")
    rel_step = get_settings().energy_rel_step if rel_step is None else rel_step
    basis = molecule_basis(params) if basis is None else basis
    nominal = getattr(params, energy)
    plus = params.model_copy(update={energy: nominal * (1.0 + rel_step)})
    minus = params.model_copy(update={energy: nominal * (1.0 - rel_step)})
    upper = transition_frequency(plus, flux, basis, label)
    lower = transition_frequency(minus, flux, basis, label)
    return (upper - lower) / (2.0 * rel_step)


def sweet_spot(
    params: MoleculeParams,
    flux_bracket: tuple[float, float] = (0.3, 0.7),
    basis: Optional[ModeBasis] = None,
    scan_points: int = 41,
    xatol: float = 1e-5,
) -> float:
    """
    Flux minimizing f_ge inside a bracket.

    A coarse scan picks the lowest sample; a bounded Brent search refines it
    between the neighbouring samples.

    Args:
        params: Circuit energies and asymmetry
        flux_bracket: (low, high) flux interval in units of Phi0
        basis: Per-mode basis (defaults to :func:`molecule_basis`)
        scan_points: Samples in the coarse scan
        xatol: Flux tolerance of the refinement

    Returns:
        Flux of the f_ge minimum in units of Phi0
    """
    low, high = flux_bracket
    if not low < high:
        raise ValidationError(f"Invalid flux bracket {flux_bracket}")
    basis = molecule_basis(params) if basis is None else basis

    def f_ge(phi_ext: float) -> float:
        return transition_frequency(params, phi_ext, basis, TransitionLabel.GE)

    grid = np.linspace(low, high, max(scan_points, 3))
    values = [f_ge(float(p)) for p in grid]
    best = int(np.argmin(values))
    left = float(grid[max(best - 1, 0)])
    right = float(grid[min(best + 1, len(grid) - 1)])
    result = minimize_scalar(
        f_ge, bounds=(left, right), method="bounded", options={"xatol": xatol}
    )
    return float(result.x) if result.fun <= values[best] else float(grid[best])
