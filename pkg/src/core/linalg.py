"""
Register Linear Algebra
Dense complex linear algebra on small qubit registers.

The basis index of |b_0 b_1 ... b_{n-1}> is the big-endian integer
sum_k b_k 2^(n-1-k): qubit 0 is the leftmost ket symbol and the most
significant bit. Left factors of tensor_product are the more significant
registers.

Example usage:
    rho = projector(ket("00") + ket("11")) / 2
    marginal = partial_trace(rho, SubsystemMask.of(2, [0]))
    pt = partial_transpose(rho, SubsystemMask.of(2, [1]))
    print(hermitian_spectrum(pt), trace_norm(pt))
"""

from typing import Iterable, Tuple

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import linalg as sla

from .tolerances import (
    EIGEN_RESIDUAL_TOL,
    HERMITIAN_TOL,
    MAX_QUBITS,
    PSD_SLACK,
    STRUCTURAL_TOL,
)

logger = logging.getLogger("core.linalg")


class SubsystemMask(BaseModel):
    """Selects a subset of the qubits of an n-qubit register."""

    model_config = ConfigDict(frozen=True)

    n_qubits: int = Field(ge=1, le=MAX_QUBITS)
    selected: Tuple[bool, ...]

    @model_validator(mode="after")
    def _check_length(self) -> "SubsystemMask":
        if len(self.selected) != self.n_qubits:
            raise ValueError(
                f"mask has {len(self.selected)} entries for {self.n_qubits} qubits"
            )
        return self

    @classmethod
    def of(cls, n_qubits: int, qubits: Iterable[int]) -> "SubsystemMask":
        """Build a mask selecting the given qubit positions."""
        chosen = set(int(q) for q in qubits)
        if any(q < 0 or q >= n_qubits for q in chosen):
            raise ValueError(f"qubit index out of range for {n_qubits} qubits")
        return cls(
            n_qubits=n_qubits,
            selected=tuple(q in chosen for q in range(n_qubits)),
        )

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(q for q, s in enumerate(self.selected) if s)

    @property
    def complement(self) -> Tuple[int, ...]:
        return tuple(q for q, s in enumerate(self.selected) if not s)

    def is_proper(self) -> bool:
        """True when at least one qubit is selected and at least one is not."""
        return 0 < len(self.indices) < self.n_qubits


def num_qubits(dim: int) -> int:
    """Number of qubits of a 2**n dimensional space."""
    n = int(dim).bit_length() - 1
    if dim < 2 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    if n > MAX_QUBITS:
        raise ValueError(f"{n} qubits exceeds the supported maximum of {MAX_QUBITS}")
    return n


def ket(bits: str) -> np.ndarray:
    """Computational basis vector for a bit string such as "0110"."""
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"invalid bit string: {bits!r}")
    vec = np.zeros(2 ** len(bits), dtype=complex)
    vec[int(bits, 2)] = 1.0
    return vec


def dagger(a: np.ndarray) -> np.ndarray:
    return a.conj().T


def projector(psi: np.ndarray) -> np.ndarray:
    """|psi><psi| for a state vector."""
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def tensor_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Kronecker product of two vectors or two square operators.

    Entry (i*dim(B)+k, j*dim(B)+l) equals A(i,j)*B(k,l).
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != b.ndim:
        raise ValueError("tensor_product needs two vectors or two matrices")
    return np.kron(a, b)


def partial_trace(rho: np.ndarray, keep: SubsystemMask) -> np.ndarray:
    """
    Trace out every qubit not selected by ``keep``.

    Args:
        rho: Density matrix on ``keep.n_qubits`` qubits
        keep: Qubits that survive

    Returns:
        Reduced density matrix on the kept qubits, in their original order
    """
    n = keep.n_qubits
    if rho.shape != (2**n, 2**n):
        raise ValueError(f"operator shape {rho.shape} does not match {n} qubits")
    if not keep.is_proper():
        raise ValueError("degenerate partial trace")

    tensor = np.asarray(rho).reshape([2] * (2 * n))
    remaining = n
    # Descending order keeps the lower axis numbers valid.
    for q in sorted(keep.complement, reverse=True):
        tensor = np.trace(tensor, axis1=q, axis2=q + remaining)
        remaining -= 1

    dim = 2**remaining
    return tensor.reshape(dim, dim)


def partial_transpose(rho: np.ndarray, transposed: SubsystemMask) -> np.ndarray:
    """Transpose the selected qubits only. Applying it twice returns ``rho``."""
    n = transposed.n_qubits
    if rho.shape != (2**n, 2**n):
        raise ValueError(f"operator shape {rho.shape} does not match {n} qubits")

    axes = list(range(2 * n))
    for q in transposed.indices:
        axes[q], axes[q + n] = axes[q + n], axes[q]

    tensor = np.asarray(rho).reshape([2] * (2 * n))
    return tensor.transpose(axes).reshape(2**n, 2**n)


def is_hermitian(h: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    scale = max(1.0, float(np.max(np.abs(h)))) if h.size else 1.0
    return bool(np.max(np.abs(h - dagger(h))) <= tol * scale)


def hermitian_eigh(h: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Certified eigendecomposition of a Hermitian operator.

    Returns:
        (eigenvalues ascending, eigenvectors as columns)

    Raises:
        ValueError: if ``h`` is not Hermitian within HERMITIAN_TOL
        numpy.linalg.LinAlgError: if the reconstruction residual is too large
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square operator, got shape {h.shape}")
    if not is_hermitian(h):
        raise ValueError("operator is not Hermitian")

    sym = (h + dagger(h)) / 2
    values, vectors = sla.eigh(sym)

    scale = float(np.max(np.abs(h)))
    residual = float(np.max(np.abs(sym - (vectors * values) @ dagger(vectors))))
    if residual > EIGEN_RESIDUAL_TOL * scale:
        raise np.linalg.LinAlgError(
            f"eigendecomposition residual {residual:.3e} exceeds tolerance"
        )
    return values, vectors


def hermitian_spectrum(h: np.ndarray) -> np.ndarray:
    """Real eigenvalues of a Hermitian operator in ascending order."""
    values, _ = hermitian_eigh(h)
    return values


def trace_norm(h: np.ndarray) -> float:
    """Sum of absolute eigenvalues of a Hermitian operator."""
    return float(np.sum(np.abs(hermitian_spectrum(h))))


def expectation(op: np.ndarray, state: np.ndarray) -> complex:
    """<psi|op|psi> for a vector, tr(op rho) for a density matrix."""
    state = np.asarray(state)
    if state.ndim == 1:
        return complex(np.vdot(state, op @ state))
    return complex(np.trace(op @ state))


def validate_state_vector(psi: np.ndarray, normalized: bool = True) -> np.ndarray:
    """Raise ValueError unless ``psi`` is a finite (normalized) register vector."""
    psi = np.asarray(psi)
    if psi.ndim != 1:
        raise ValueError("state vector must be one-dimensional")
    num_qubits(psi.shape[0])
    if not np.all(np.isfinite(psi)):
        raise ValueError("state vector has non-finite amplitudes")
    if normalized and abs(np.vdot(psi, psi).real - 1.0) > STRUCTURAL_TOL:
        raise ValueError("state vector is not normalized")
    return psi


def validate_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Raise ValueError unless ``rho`` is Hermitian, unit-trace and PSD."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {rho.shape}")
    num_qubits(rho.shape[0])
    if not np.all(np.isfinite(rho)):
        raise ValueError("density matrix has non-finite entries")
    if np.max(np.abs(rho - dagger(rho))) > STRUCTURAL_TOL:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > STRUCTURAL_TOL:
        raise ValueError("density matrix does not have unit trace")
    if hermitian_spectrum(rho)[0] < PSD_SLACK:
        raise ValueError("density matrix has a negative eigenvalue")
    return rho


def validate_unitary(u: np.ndarray, tol: float = STRUCTURAL_TOL) -> np.ndarray:
    """Raise ValueError unless U^dagger U = I within ``tol``."""
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    if np.max(np.abs(dagger(u) @ u - np.eye(u.shape[0]))) > tol:
        raise ValueError("operator is not unitary")
    return u
