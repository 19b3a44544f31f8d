"""Truncated harmonic-oscillator operators and two-mode tensor products.

Operators are dense complex matrices. Mode 1 is always the left Kronecker
factor, so the two-mode index of |k1, k2> is ``k1 * dim + k2``.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import expm

from src.core.exceptions import InvalidBasisError

OperatorMatrix = NDArray[np.complex128]

HERMITIAN_ATOL = 1e-12


@dataclass(frozen=True)
class ModeBasis:
    """
    Truncated oscillator basis of one circuit mode.

    ``phi_zpf`` and ``n_zpf`` are the zero-point amplitudes in
    ``phi = phi_zpf (a + a^dag)`` and ``n = i n_zpf (a^dag - a)``; their
    product is 1/2 so that [phi, n] = i away from the truncation corner.
    """

    dim: int
    phi_zpf: float
    n_zpf: Optional[float] = None
    pad: int = 8

    def __post_init__(self) -> None:
        if self.n_zpf is None:
            if self.phi_zpf <= 0:
                raise InvalidBasisError(f"phi_zpf must be positive, got {self.phi_zpf}")
            object.__setattr__(self, "n_zpf", 0.5 / self.phi_zpf)
        validate_basis(self)

    @property
    def padded_dim(self) -> int:
        """Dimension of the oversized construction basis."""
        return self.dim + self.pad


def validate_basis(basis: ModeBasis) -> None:
    """
    Check the basis invariants.

    Args:
        basis: Basis to check

    Raises:
        InvalidBasisError: If dim < 2, pad < 0 or the amplitudes are not canonical
    """
    if int(basis.dim) != basis.dim or basis.dim < 2:
        raise InvalidBasisError(f"Basis dimension must be an integer >= 2, got {basis.dim}")
    if int(basis.pad) != basis.pad or basis.pad < 0:
        raise InvalidBasisError(f"Basis pad must be a non-negative integer, got {basis.pad}")
    if basis.n_zpf is None or basis.phi_zpf <= 0 or basis.n_zpf <= 0:
        raise InvalidBasisError("Zero-point amplitudes must be positive")
    if abs(basis.phi_zpf * basis.n_zpf - 0.5) > 1e-12:
        raise InvalidBasisError(
            f"phi_zpf * n_zpf must equal 1/2, got {basis.phi_zpf * basis.n_zpf!r}"
        )


def _lowering(dim: int) -> NDArray[np.complex128]:
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), k=1).astype(np.complex128)


def ladder_ops(basis: ModeBasis) -> tuple[OperatorMatrix, OperatorMatrix]:
    """
    Lowering and raising operators of the truncated oscillator.

    Args:
        basis: Mode basis

    Returns:
        Tuple of (lowering, raising)

    Raises:
        InvalidBasisError: If the basis is invalid
    """
    validate_basis(basis)
    lowering = _lowering(basis.dim)
    return lowering, lowering.conj().T.copy()


def phase_op(basis: ModeBasis) -> OperatorMatrix:
    """phi = phi_zpf (a + a^dag)."""
    lowering, raising = ladder_ops(basis)
    return basis.phi_zpf * (lowering + raising)


def number_op(basis: ModeBasis) -> OperatorMatrix:
    """n = i n_zpf (a^dag - a)."""
    lowering, raising = ladder_ops(basis)
    return 1j * basis.n_zpf * (raising - lowering)


def _padded_phase(basis: ModeBasis) -> OperatorMatrix:
    lowering = _lowering(basis.padded_dim)
    return basis.phi_zpf * (lowering + lowering.conj().T)


@lru_cache(maxsize=128)
def _padded_displacement(basis: ModeBasis) -> OperatorMatrix:
    """exp(i phi) built in the oversized basis and cropped to dim x dim."""
    validate_basis(basis)
    disp = expm(1j * _padded_phase(basis))[: basis.dim, : basis.dim]
    disp.setflags(write=False)
    return disp


def cosine_phase_op(basis: ModeBasis, offset: float = 0.0) -> OperatorMatrix:
    """
    cos(phi - offset) = (e^{i phi} e^{-i offset} + h.c.) / 2.

    The exponential is taken in a basis of size dim + pad and cropped, which
    removes the truncation error of exponentiating an already-cropped phi.

    Args:
        basis: Mode basis
        offset: Phase offset in radians

    Returns:
        Hermitian dim x dim matrix
    """
    disp = _padded_displacement(basis) * np.exp(-1j * offset)
    return 0.5 * (disp + disp.conj().T)


def sine_phase_op(basis: ModeBasis, offset: float = 0.0) -> OperatorMatrix:
    """sin(phi - offset), built like :func:`cosine_phase_op`."""
    disp = _padded_displacement(basis) * np.exp(-1j * offset)
    return (disp - disp.conj().T) / 2j


@lru_cache(maxsize=128)
def _padded_quadratics(basis: ModeBasis) -> tuple[OperatorMatrix, OperatorMatrix]:
    phi = _padded_phase(basis)
    lowering = _lowering(basis.padded_dim)
    n = 1j * basis.n_zpf * (lowering.conj().T - lowering)
    phi_sq = (phi @ phi)[: basis.dim, : basis.dim]
    n_sq = (n @ n)[: basis.dim, : basis.dim]
    phi_sq.setflags(write=False)
    n_sq.setflags(write=False)
    return phi_sq, n_sq


def phase_squared_op(basis: ModeBasis) -> OperatorMatrix:
    """phi^2 without the corner error of squaring a cropped phi."""
    return _padded_quadratics(basis)[0].copy()


def number_squared_op(basis: ModeBasis) -> OperatorMatrix:
    """n^2 without the corner error of squaring a cropped n."""
    return _padded_quadratics(basis)[1].copy()


def identity_op(basis: ModeBasis) -> OperatorMatrix:
    """Identity on one mode."""
    return np.eye(basis.dim, dtype=np.complex128)


def tensor_product(a: NDArray, b: NDArray) -> OperatorMatrix:
    """
    Kronecker product with mode 1 as the left factor.

    Args:
        a: Operator on mode 1
        b: Operator on mode 2

    Returns:
        Operator on the two-mode space
    """
    if a.ndim != 2 or a.shape[0] != a.shape[1] or b.ndim != 2 or b.shape[0] != b.shape[1]:
        raise InvalidBasisError("tensor_product expects square matrices")
    return np.kron(a, b).astype(np.complex128, copy=False)


def is_hermitian(op: NDArray, atol: float = HERMITIAN_ATOL) -> bool:
    """Entrywise Hermiticity check."""
    return op.shape[0] == op.shape[1] and bool(
        np.max(np.abs(op - op.conj().T), initial=0.0) <= atol
    )


def commutator(a: NDArray, b: NDArray) -> OperatorMatrix:
    """[a, b] = ab - ba."""
    return a @ b - b @ a
