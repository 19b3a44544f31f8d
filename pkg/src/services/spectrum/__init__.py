"""Spectrum: diagonalization, sweeps, sensitivities and wavefunctions."""

from src.services.spectrum.diagonalization import (
    Eigensystem,
    Spectrum,
    diagonalize,
    eigensystem,
    solve,
    swap_parity,
)
from src.services.spectrum.sensitivity import (
    asymmetry_sensitivity,
    energy_sensitivity,
    flux_sensitivity,
    sweet_spot,
    transition_frequency,
)
from src.services.spectrum.sweep import (
    ConvergenceReport,
    SweepResult,
    convergence_check,
    flux_sweep,
    map_ordered,
)
from src.services.spectrum.wavefunctions import (
    WavefunctionGrid,
    oscillator_functions,
    wavefunction_grid,
)

__all__ = [
    "ConvergenceReport",
    "Eigensystem",
    "Spectrum",
    "SweepResult",
    "WavefunctionGrid",
    "asymmetry_sensitivity",
    "convergence_check",
    "diagonalize",
    "eigensystem",
    "energy_sensitivity",
    "flux_sensitivity",
    "flux_sweep",
    "map_ordered",
    "oscillator_functions",
    "solve",
    "swap_parity",
    "sweet_spot",
    "transition_frequency",
    "wavefunction_grid",
]
