"""Molecule Hamiltonian assembly in the loop gauge and the common/differential gauge."""

import math
from typing import Optional

import numpy as np

from src.core.config import get_settings
from src.core.logging import get_logger
from src.quantum.operators import (
    ModeBasis,
    OperatorMatrix,
    cosine_phase_op,
    identity_op,
    number_squared_op,
    phase_op,
    phase_squared_op,
    tensor_product,
)
from src.schemas.circuit import FluxPoint, MoleculeParams, as_flux_point

logger = get_logger(__name__)

MIN_RECOMMENDED_DIM = 10


def molecule_basis(
    params: MoleculeParams, dim: Optional[int] = None, pad: Optional[int] = None
) -> ModeBasis:
    """
    Oscillator basis matched to the per-mode quadratic term (2/3) E_L phi^2 / 2.

    Both modes use the same basis; the phi1*phi2 coupling and the cosines are
    explicit off-diagonal terms.

    Args:
        params: Circuit energies
        dim: Levels per mode (defaults to settings.basis_dim)
        pad: Oversize margin (defaults to settings.basis_pad)

    Returns:
        ModeBasis with phi_zpf = (3 E_C / E_L)^(1/4)
    """
    settings = get_settings()
    phi_zpf = (3.0 * params.e_c / params.e_l) ** 0.25
    return ModeBasis(
        dim=settings.basis_dim if dim is None else dim,
        phi_zpf=phi_zpf,
        pad=settings.basis_pad if pad is None else pad,
    )


def harmonic_frequencies(params: MoleculeParams) -> tuple[float, float]:
    """
    Normal-mode frequencies of the E_J = 0 molecule.

    Returns:
        Tuple of (common, differential) in GHz
    """
    common = math.sqrt(8.0 * params.e_c * params.e_l)
    return common, common / math.sqrt(3.0)


def loop_phases(params: MoleculeParams, flux: FluxPoint | float) -> tuple[float, float]:
    """Reduced fluxes (1 + alpha/2) 2 pi Phi_ext and (1 - alpha/2) 2 pi Phi_ext."""
    phi_ext = as_flux_point(flux).phi_ext
    theta = 2.0 * math.pi * phi_ext
    return (1.0 + params.alpha / 2.0) * theta, (1.0 - params.alpha / 2.0) * theta


def swap_operator(dim: int) -> np.ndarray:
    """Permutation |k1, k2> -> |k2, k1> on the two-mode space."""
    index = np.arange(dim * dim)
    swapped = (index % dim) * dim + index // dim
    perm = np.zeros((dim * dim, dim * dim))
    perm[swapped, index] = 1.0
    return perm


def _resolve_basis(params: MoleculeParams, basis: Optional[ModeBasis]) -> ModeBasis:
    basis = molecule_basis(params) if basis is None else basis
    if basis.dim < MIN_RECOMMENDED_DIM and params.e_j > 0:
        logger.warning(
            "basis_too_small",
            dim=basis.dim,
            ej_over_ec=params.e_j / params.e_c,
            recommended=MIN_RECOMMENDED_DIM,
        )
    return basis


def _kinetic(params: MoleculeParams, basis: ModeBasis) -> OperatorMatrix:
    n_sq = number_squared_op(basis)
    eye = identity_op(basis)
    return 4.0 * params.e_c * (tensor_product(n_sq, eye) + tensor_product(eye, n_sq))


def _hermitize(h: OperatorMatrix) -> OperatorMatrix:
    return 0.5 * (h + h.conj().T)


def build_hamiltonian(
    params: MoleculeParams,
    flux: FluxPoint | float,
    basis: Optional[ModeBasis] = None,
) -> OperatorMatrix:
    """
    Loop-gauge Hamiltonian with flux asymmetry.

    H = 4 E_C (n1^2 + n2^2) + (E_L/3)(phi1^2 + phi2^2 + phi1 phi2)
        - E_J cos(phi1 - (1 + alpha/2) 2 pi Phi_ext)
        - E_J cos(phi2 - (1 - alpha/2) 2 pi Phi_ext)

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        basis: Per-mode basis (defaults to :func:`molecule_basis`)

    Returns:
        Hermitian matrix of dimension basis.dim**2, in GHz
    """
    basis = _resolve_basis(params, basis)
    theta1, theta2 = loop_phases(params, flux)

    eye = identity_op(basis)
    phi = phase_op(basis)
    phi_sq = phase_squared_op(basis)

    inductive = (params.e_l / 3.0) * (
        tensor_product(phi_sq, eye)
        + tensor_product(eye, phi_sq)
        + tensor_product(phi, phi)
    )
    josephson = -params.e_j * (
        tensor_product(cosine_phase_op(basis, theta1), eye)
        + tensor_product(eye, cosine_phase_op(basis, theta2))
    )
    return _hermitize(_kinetic(params, basis) + inductive + josephson)


def build_hamiltonian_gauge2(
    params: MoleculeParams,
    flux: FluxPoint | float,
    basis: Optional[ModeBasis] = None,
) -> OperatorMatrix:
    """
    Hamiltonian after shifting each phase by its loop flux.

    H = 4 E_C (n1^2 + n2^2)
        + (E_L/4) [(phi1 + phi2 + phi_com)^2 + (1/3)(phi1 - phi2 + phi_diff)^2]
        - 2 E_J cos((phi1 + phi2)/2) cos((phi1 - phi2)/2)

    with phi_com = 2 * 2 pi Phi_ext and phi_diff = alpha * 2 pi Phi_ext. The
    junction term equals -E_J (cos phi1 + cos phi2) because phi1 and phi2
    commute; it is assembled in that form so both modes share the padded
    cosine kernel.

    Args:
        params: Circuit energies and asymmetry
        flux: Applied flux (units of Phi0)
        basis: Per-mode basis (defaults to :func:`molecule_basis`)

    Returns:
        Hermitian matrix of dimension basis.dim**2, in GHz
    """
    basis = _resolve_basis(params, basis)
    theta1, theta2 = loop_phases(params, flux)
    phi_com = theta1 + theta2
    phi_diff = theta1 - theta2

    eye = identity_op(basis)
    eye2 = tensor_product(eye, eye)
    phi = phase_op(basis)
    phi_sq = phase_squared_op(basis)

    phi1 = tensor_product(phi, eye)
    phi2 = tensor_product(eye, phi)
    squares = tensor_product(phi_sq, eye) + tensor_product(eye, phi_sq)
    cross = tensor_product(phi, phi)

    common_sq = squares + 2.0 * cross + 2.0 * phi_com * (phi1 + phi2) + phi_com**2 * eye2
    diff_sq = squares - 2.0 * cross + 2.0 * phi_diff * (phi1 - phi2) + phi_diff**2 * eye2
    inductive = (params.e_l / 4.0) * (common_sq + diff_sq / 3.0)

    cos_phi = cosine_phase_op(basis, 0.0)
    josephson = -params.e_j * (tensor_product(cos_phi, eye) + tensor_product(eye, cos_phi))
    return _hermitize(_kinetic(params, basis) + inductive + josephson)
