"""Dense Hermitian diagonalization and transition labelling."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import LinAlgError, eigh

from src.core.config import get_settings
from src.core.exceptions import ContractViolationError, DiagonalizationError, ValidationError
from src.core.logging import get_logger
from src.quantum.operators import ModeBasis
from src.schemas.circuit import FluxPoint, MoleculeParams, TransitionLabel
from src.services.circuit.hamiltonian import build_hamiltonian, molecule_basis

logger = get_logger(__name__)

RESIDUAL_RTOL = 1e-8


@dataclass(frozen=True)
class Eigensystem:
    """Lowest eigenpairs; ``vectors[:, i]`` belongs to ``energies[i]``."""

    energies: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class Spectrum:
    """
    Ground-referenced levels and labelled transitions.

    ``levels[0]`` is 0 and ``transitions`` holds every label whose levels
    were computed. ``parities`` is filled by :func:`solve` only.
    """

    levels: np.ndarray
    transitions: dict[TransitionLabel, float]
    ground_energy: float = 0.0
    parities: Optional[np.ndarray] = field(default=None, compare=False)

    def transition(self, label: TransitionLabel | str) -> float:
        """
        Frequency of one labelled transition.

        Raises:
            ValidationError: If the spectrum holds too few levels for the label
        """
        label = TransitionLabel(label)
        if label not in self.transitions:
            raise ValidationError(
                f"Transition {label.value} needs {label.levels[1] + 1} levels, "
                f"spectrum has {len(self.levels)}"
            )
        return self.transitions[label]

    @property
    def f_ge(self) -> float:
        """g -> e frequency in GHz."""
        return self.transition(TransitionLabel.GE)


def _checked_matrix(h: np.ndarray, k: int) -> np.ndarray:
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ContractViolationError(f"Expected a square matrix, got shape {h.shape}")
    if not 1 <= k <= h.shape[0]:
        raise ValidationError(f"k must lie in [1, {h.shape[0]}], got {k}")
    atol = get_settings().hermiticity_atol
    asymmetry = float(np.max(np.abs(h - h.conj().T), initial=0.0))
    if asymmetry > atol:
        raise ContractViolationError(
            f"Matrix is not Hermitian: max |H - H^dag| = {asymmetry:.3e} > {atol:.0e}"
        )
    if np.iscomplexobj(h) and float(np.max(np.abs(h.imag), initial=0.0)) <= atol:
        return np.ascontiguousarray(h.real)
    return h


def eigensystem(h: np.ndarray, k: int) -> Eigensystem:
    """
    Lowest ``k`` eigenpairs of a Hermitian matrix.

    Args:
        h: Hermitian matrix
        k: Number of eigenpairs

    Returns:
        Eigensystem with ascending energies

    Raises:
        ContractViolationError: If ``h`` is not Hermitian within tolerance
        DiagonalizationError: If LAPACK fails or an eigenpair misses the residual bound
    """
    matrix = _checked_matrix(h, k)
    try:
        energies, vectors = eigh(matrix, subset_by_index=[0, k - 1])
    except (LinAlgError, ValueError) as e:
        raise DiagonalizationError(f"Eigensolver failed: {e}") from e

    scale = max(float(np.linalg.norm(matrix)), 1.0)
    residuals = np.linalg.norm(matrix @ vectors - vectors * energies, axis=0)
    worst = float(residuals.max(initial=0.0))
    if not np.all(np.isfinite(energies)) or worst > RESIDUAL_RTOL * scale:
        raise DiagonalizationError(
            f"Eigenpair residual {worst:.3e} exceeds {RESIDUAL_RTOL:.0e} * ||H||"
        )
    return Eigensystem(energies=energies, vectors=vectors)


def _label_transitions(levels: np.ndarray) -> dict[TransitionLabel, float]:
    return {
        label: float(levels[upper] - levels[lower])
        for label in TransitionLabel
        for lower, upper in [label.levels]
        if upper < len(levels)
    }


def diagonalize(h: np.ndarray, k: Optional[int] = None) -> Spectrum:
    """
    Lowest ``k`` levels of ``h``, referenced to the ground state.

    Args:
        h: Hermitian matrix in GHz
        k: Number of levels (defaults to settings.eigen_count, capped at dim)

    Returns:
        Spectrum

    Raises:
        ContractViolationError: If ``h`` is not Hermitian within 1e-9
        DiagonalizationError: If the eigensolver fails
    """
    if k is None:
        k = min(get_settings().eigen_count, h.shape[0])
    system = eigensystem(h, k)
    ground = float(system.energies[0])
    levels = system.energies - ground
    return Spectrum(levels=levels, transitions=_label_transitions(levels), ground_energy=ground)


def swap_parity(vectors: np.ndarray, dim: int) -> np.ndarray:
    """
    Expectation of the mode-swap permutation for each column of ``vectors``.

    Values are +1 (symmetric) or -1 (antisymmetric) when the state is a
    swap eigenstate.
    """
    count = vectors.shape[1]
    grid = vectors.reshape(dim, dim, count)
    swapped = grid.transpose(1, 0, 2).reshape(dim * dim, count)
    return np.real(np.einsum("ij,ij->j", vectors.conj(), swapped))


def solve(
    params: MoleculeParams,
    flux: FluxPoint | float,
    basis: Optional[ModeBasis] = None,
    k: Optional[int] = None,
) -> Spectrum:
    """
    Build and diagonalize the molecule Hamiltonian at one flux point.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        basis: Per-mode basis (defaults to :func:`molecule_basis`)
        k: Number of levels (defaults to settings.eigen_count)

    Returns:
        Spectrum with swap parities and absolute ground energy
    """
    basis = molecule_basis(params) if basis is None else basis
    h = build_hamiltonian(params, flux, basis)
    k = min(get_settings().eigen_count if k is None else k, h.shape[0])
    system = eigensystem(h, k)
    ground = float(system.energies[0])
    levels = system.energies - ground
    return Spectrum(
        levels=levels,
        transitions=_label_transitions(levels),
        ground_energy=ground,
        parities=swap_parity(system.vectors, basis.dim),
    )
