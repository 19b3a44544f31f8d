"""Eigenstate wavefunctions on a (phi1, phi2) grid."""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.core.exceptions import ValidationError
from src.quantum.operators import ModeBasis
from src.schemas.circuit import FluxPoint, GridSpec, MoleculeParams
from src.services.circuit.hamiltonian import build_hamiltonian, molecule_basis
from src.services.spectrum.diagonalization import eigensystem


@dataclass(frozen=True)
class WavefunctionGrid:
    """Real amplitudes ``amplitude[s][i, j]`` = Psi_s(phi1[i], phi2[j])."""

    phi1_axis: np.ndarray
    phi2_axis: np.ndarray
    state_indices: tuple[int, ...]
    amplitude: np.ndarray

    def state(self, index: int) -> np.ndarray:
        """Amplitude of one computed eigenstate."""
        try:
            return self.amplitude[self.state_indices.index(index)]
        except ValueError as e:
            raise ValidationError(f"State {index} was not computed") from e

    def cell_area(self) -> float:
        """Area element of the grid."""
        d1 = self.phi1_axis[1] - self.phi1_axis[0] if len(self.phi1_axis) > 1 else 1.0
        d2 = self.phi2_axis[1] - self.phi2_axis[0] if len(self.phi2_axis) > 1 else 1.0
        return float(d1 * d2)

    def norm(self, index: int) -> float:
        """Discrete L2 norm of one state."""
        return float(math.sqrt(np.sum(self.state(index) ** 2) * self.cell_area()))

    def moment(self, index: int, p: int, q: int) -> float:
        """<phi1^p phi2^q> of one state over the grid."""
        p1, p2 = np.meshgrid(self.phi1_axis, self.phi2_axis, indexing="ij")
        density = self.state(index) ** 2
        return float(np.sum(p1**p * p2**q * density) / np.sum(density))


def oscillator_functions(basis: ModeBasis, phi: np.ndarray) -> np.ndarray:
    """
    Position-space oscillator eigenfunctions psi_n(phi), n < basis.dim.

    Uses the normalized Hermite-function recurrence with
    x = phi / (sqrt(2) phi_zpf).

    Returns:
        Array of shape (dim, len(phi))
    """
    length = math.sqrt(2.0) * basis.phi_zpf
    x = np.asarray(phi, dtype=float) / length
    funcs = np.empty((basis.dim, x.size))
    funcs[0] = math.pi**-0.25 * np.exp(-0.5 * x**2)
    if basis.dim > 1:
        funcs[1] = math.sqrt(2.0) * x * funcs[0]
    for n in range(1, basis.dim - 1):
        funcs[n + 1] = (
            math.sqrt(2.0 / (n + 1)) * x * funcs[n] - math.sqrt(n / (n + 1)) * funcs[n - 1]
        )
    return funcs / math.sqrt(length)


def wavefunction_grid(
    params: MoleculeParams,
    flux: FluxPoint | float,
    basis: Optional[ModeBasis] = None,
    state_indices: Sequence[int] = (0,),
    grid_spec: Optional[GridSpec] = None,
) -> WavefunctionGrid:
    """
    Evaluate eigenstates on a phase grid.

    The global sign of each state is fixed so that its largest-magnitude
    grid value is positive.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        basis: Per-mode basis (defaults to :func:`molecule_basis`)
        state_indices: Eigenstates to evaluate (0 = ground)
        grid_spec: Grid (defaults to [-2pi, 2pi]^2, 201 x 201)

    Returns:
        WavefunctionGrid

    Raises:
        ValidationError: If a state index is negative or beyond the basis
    """
    indices = tuple(int(i) for i in state_indices)
    basis = molecule_basis(params) if basis is None else basis
    if not indices or min(indices) < 0 or max(indices) >= basis.dim**2:
        raise ValidationError(f"Invalid state indices {state_indices}")
    grid_spec = grid_spec or GridSpec()
    phi1_axis, phi2_axis = grid_spec.axes()

    system = eigensystem(build_hamiltonian(params, flux, basis), max(indices) + 1)
    b1 = oscillator_functions(basis, phi1_axis)
    b2 = oscillator_functions(basis, phi2_axis)

    amplitudes = []
    for index in indices:
        coeffs = np.real_if_close(system.vectors[:, index]).real.reshape(basis.dim, basis.dim)
        psi = b1.T @ coeffs @ b2
        peak = psi.flat[int(np.argmax(np.abs(psi)))]
        amplitudes.append(psi if peak >= 0 else -psi)

    return WavefunctionGrid(
        phi1_axis=phi1_axis,
        phi2_axis=phi2_axis,
        state_indices=indices,
        amplitude=np.stack(amplitudes),
    )
