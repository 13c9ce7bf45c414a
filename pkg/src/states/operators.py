"""
Pauli Operators and Rotations
The real Pauli set u^0..u^3, Pauli pairs U^{mu nu}, the Bell basis and the
4x4 rotations S and T that build the four-qubit resource states.

Pauli pairs are indexed by 4*mu + nu wherever a flat index is needed.

Example usage:
    x = pauli(1)
    u = pauli_pair((1, 3))
    phi = bell(0)
    s = rotation_S(0.3, -0.2)
"""

from typing import List, Tuple

import numpy as np

from ..core.linalg import validate_unitary

PauliPairIndex = Tuple[int, int]

# u^0 = I, u^1 = sigma^1, u^2 = i sigma^2, u^3 = sigma^3 (all real).
_REAL_PAULIS = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, 1], [-1, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
_REAL_PAULIS.setflags(write=False)

# Hermitian sigma^0..sigma^3, with sigma^2 the usual sigma_y.
_HERMITIAN_PAULIS = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
_HERMITIAN_PAULIS.setflags(write=False)

PAULI_PAIRS: List[PauliPairIndex] = [(mu, nu) for mu in range(4) for nu in range(4)]


def _check_index(mu: int) -> int:
    if mu not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be 0..3, got {mu}")
    return mu


def pair_index(p: PauliPairIndex) -> int:
    """Flat index 4*mu + nu of a Pauli pair."""
    mu, nu = p
    return 4 * _check_index(mu) + _check_index(nu)


def pauli(mu: int) -> np.ndarray:
    """Real Pauli operator u^mu."""
    return _REAL_PAULIS[_check_index(mu)].copy()


def hermitian_pauli(mu: int) -> np.ndarray:
    """Hermitian Pauli operator sigma^mu (sigma^2 = -i u^2)."""
    return _HERMITIAN_PAULIS[_check_index(mu)].copy()


def pauli_pair(p: PauliPairIndex) -> np.ndarray:
    """U^{mu nu} = u^mu (x) u^nu."""
    mu, nu = p
    return np.kron(pauli(mu), pauli(nu))


def pauli_stack() -> np.ndarray:
    """All four u^mu as a (4, 2, 2) array."""
    return _REAL_PAULIS.copy()


def pauli_pair_stack() -> np.ndarray:
    """All sixteen U^{mu nu} as a (16, 4, 4) array in flat-index order."""
    return np.array([pauli_pair(p) for p in PAULI_PAIRS])


def bell(mu: int) -> np.ndarray:
    """|Psi^mu_Bell> = (u^mu (x) u^0)(|00> + |11>)/sqrt(2)."""
    phi0 = np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2)
    return np.kron(pauli(mu), np.eye(2)) @ phi0


def bell_basis() -> np.ndarray:
    """The four Bell vectors as the columns of a 4x4 matrix."""
    return np.column_stack([bell(mu) for mu in range(4)])


def rotation_S(theta: float, phi: float) -> np.ndarray:
    """Rotation by theta in the (|00>,|11>) plane and by phi in (|01>,|10>)."""
    c, s = np.cos(theta), np.sin(theta)
    cp, sp = np.cos(phi), np.sin(phi)
    return np.array(
        [
            [c, 0, 0, -s],
            [0, cp, -sp, 0],
            [0, sp, cp, 0],
            [s, 0, 0, c],
        ],
        dtype=complex,
    )


def rotation_T(theta: float, phi: float) -> np.ndarray:
    """Like rotation_S but with the two middle rows exchanged."""
    c, s = np.cos(theta), np.sin(theta)
    cp, sp = np.cos(phi), np.sin(phi)
    return np.array(
        [
            [c, 0, 0, -s],
            [0, sp, cp, 0],
            [0, cp, -sp, 0],
            [s, 0, 0, c],
        ],
        dtype=complex,
    )


def pauli_recovery(n_qubits: int = 2) -> np.ndarray:
    """
    Standard recovery set r^mu = u^mu (one qubit) or R^{mu nu} = U^{mu nu}.

    Returns:
        (4, 2, 2) or (16, 4, 4) stack
    """
    if n_qubits == 1:
        return pauli_stack()
    if n_qubits == 2:
        return pauli_pair_stack()
    raise ValueError("recovery sets exist for one or two qubits")


def validate_recovery(recovery: np.ndarray, n_qubits: int) -> np.ndarray:
    """Check shape and unitarity of a recovery set."""
    recovery = np.asarray(recovery, dtype=complex)
    count, dim = (4, 2) if n_qubits == 1 else (16, 4)
    if recovery.shape != (count, dim, dim):
        raise ValueError(
            f"recovery set must have shape {(count, dim, dim)}, got {recovery.shape}"
        )
    for op in recovery:
        validate_unitary(op)
    return recovery
