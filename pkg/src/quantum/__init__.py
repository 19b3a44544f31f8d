"""Quantum operator construction for truncated oscillator modes."""

from src.quantum.operators import (
    ModeBasis,
    OperatorMatrix,
    cosine_phase_op,
    identity_op,
    ladder_ops,
    number_op,
    number_squared_op,
    phase_op,
    phase_squared_op,
    sine_phase_op,
    tensor_product,
)

__all__ = [
    "ModeBasis",
    "OperatorMatrix",
    "cosine_phase_op",
    "identity_op",
    "ladder_ops",
    "number_op",
    "number_squared_op",
    "phase_op",
    "phase_squared_op",
    "sine_phase_op",
    "tensor_product",
]
