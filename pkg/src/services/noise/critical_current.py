"""Dephasing from critical-current fluctuations of the junctions."""

import math
from typing import Optional

from src.core.exceptions import ValidationError
from src.quantum.operators import ModeBasis
from src.schemas.circuit import FluxPoint, MoleculeParams
from src.schemas.noise import CriticalCurrentTarget, FormulaMode
from src.services.noise.flux_noise import DephasingResult, solve_ramsey_rate
from src.services.spectrum.sensitivity import energy_sensitivity

DEFAULT_REL_AMP = 1e-3
DEFAULT_ARRAY_JUNCTIONS = 40


def effective_amplitude(
    target: CriticalCurrentTarget | str, rel_amp: float, n_array: int = DEFAULT_ARRAY_JUNCTIONS
) -> float:
    """
    Fractional energy excursion seen by the circuit.

    Independent fluctuations of the array junctions average down by
    sqrt(n_array).

    Raises:
        ValidationError: If rel_amp < 0 or n_array < 1
    """
    if rel_amp < 0:
        raise ValidationError(f"rel_amp must be non-negative, got {rel_amp}")
    if CriticalCurrentTarget(target) is CriticalCurrentTarget.SMALL_JUNCTION:
        return rel_amp
    if n_array < 1:
        raise ValidationError(f"n_array must be >= 1, got {n_array}")
    return rel_amp / math.sqrt(n_array)


def critical_current_dephasing(
    params: MoleculeParams,
    flux: FluxPoint | float,
    basis: Optional[ModeBasis] = None,
    target: CriticalCurrentTarget | str = CriticalCurrentTarget.SMALL_JUNCTION,
    rel_amp: float = DEFAULT_REL_AMP,
    n_array: int = DEFAULT_ARRAY_JUNCTIONS,
    f_ir: Optional[float] = None,
) -> DephasingResult:
    """
    Ramsey rate from 1/f critical-current noise.

    The small-junction target varies E_J on both junctions together; the
    array target varies E_L. The rate uses the conventional formula.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        basis: Per-mode basis (defaults to the molecule basis)
        target: Which junctions fluctuate
        rel_amp: Fractional 1/f amplitude of the critical current
        n_array: Junctions per superinductance array
        f_ir: Infrared cutoff in Hz (defaults to settings.f_ir)

    Returns:
        DephasingResult
    """
    target = CriticalCurrentTarget(target)
    amplitude = effective_amplitude(target, rel_amp, n_array)
    if amplitude == 0:
        return DephasingResult(gamma=0.0, eta=0.0, iterations=0, mode=FormulaMode.CONVENTIONAL)
    energy = "e_j" if target is CriticalCurrentTarget.SMALL_JUNCTION else "e_l"
    slope = energy_sensitivity(params, flux, energy, basis)
    return solve_ramsey_rate(amplitude, slope, f_ir, FormulaMode.CONVENTIONAL)
