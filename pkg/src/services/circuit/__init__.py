"""Circuit model: Hamiltonians and classical potential."""

from src.services.circuit.hamiltonian import (
    build_hamiltonian,
    build_hamiltonian_gauge2,
    harmonic_frequencies,
    loop_phases,
    molecule_basis,
    swap_operator,
)
from src.services.circuit.potential import (
    PotentialGrid,
    PotentialMinimum,
    classical_minima,
    critical_flux,
    lowest_wells,
    potential_energy,
    potential_landscape,
)

__all__ = [
    "PotentialGrid",
    "PotentialMinimum",
    "build_hamiltonian",
    "build_hamiltonian_gauge2",
    "classical_minima",
    "critical_flux",
    "harmonic_frequencies",
    "loop_phases",
    "lowest_wells",
    "molecule_basis",
    "potential_energy",
    "potential_landscape",
    "swap_operator",
]
