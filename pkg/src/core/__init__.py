"""
Core Module
Register linear algebra, tolerances and seeded random sampling.
"""

from .linalg import (
    SubsystemMask,
    dagger,
    expectation,
    hermitian_eigh,
    hermitian_spectrum,
    ket,
    num_qubits,
    partial_trace,
    partial_transpose,
    projector,
    tensor_product,
    trace_norm,
    validate_density_matrix,
    validate_state_vector,
    validate_unitary,
)
from .sampling import RNG_ALGORITHM, RandomStream, sample_random

__all__ = [
    "SubsystemMask",
    "dagger",
    "expectation",
    "hermitian_eigh",
    "hermitian_spectrum",
    "ket",
    "num_qubits",
    "partial_trace",
    "partial_transpose",
    "projector",
    "tensor_product",
    "trace_norm",
    "validate_density_matrix",
    "validate_state_vector",
    "validate_unitary",
    "RNG_ALGORITHM",
    "RandomStream",
    "sample_random",
]
