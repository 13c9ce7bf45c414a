"""
Teleportation Channels
Effective channels of single-qubit teleportation (T0, T1) and of two-qubit
teleportation with a four-qubit resource (E0, E1).

Every channel here is a weighted Pauli(-pair) mixture. The general forms T1 and
E1 are built once as transfer matrices on row-major vectorized operators:
vec(A rho B) = (A (x) B^T) vec(rho). That makes them cheap to apply to many
inputs, which the Haar Monte Carlo fidelity checks rely on.

Example usage:
    a = AnglePair(theta=0.2, phi=0.4)
    xi = iso_mixture(0.2, 0.4, q=0.6)
    rho_out = bichannel_E0(xi, projector(input_state(0.3)), a)
    lam = bichannel_superoperator(xi, a, pauli_recovery(2))
"""

from typing import Optional

import numpy as np

from ..core.linalg import dagger, validate_density_matrix
from ..states.factory import AngleLike, upsilon_basis
from ..states.operators import (
    bell_basis,
    pauli_pair_stack,
    pauli_recovery,
    pauli_stack,
    validate_recovery,
)


def bell_overlap_matrix(chi: np.ndarray) -> np.ndarray:
    """<Psi^alpha_Bell| chi |Psi^beta_Bell> as a 4x4 matrix."""
    basis = bell_basis()
    return dagger(basis) @ chi @ basis


def upsilon_overlap_matrix(xi: np.ndarray, a: AngleLike) -> np.ndarray:
    """<Upsilon^{alpha beta}(a)| Xi |Upsilon^{gamma delta}(a)>, flat indices 4*mu+nu."""
    basis = upsilon_basis(a)
    return dagger(basis) @ xi @ basis


def _transfer_matrix(
    weights: np.ndarray, frame: np.ndarray, recovery: np.ndarray
) -> np.ndarray:
    """
    Transfer matrix of rho -> (1/n) sum_{ab} W_ab sum_m A_{ma} rho B_{mb}.

    A_{ma} = R_m F_a^dagger F_m^dagger and B_{mb} = F_m F_b R_m^dagger, with F the
    Pauli frame (n = 4 or 16 elements) and R the recovery set.
    """
    n, d, _ = frame.shape
    frame_dag = np.conj(np.transpose(frame, (0, 2, 1)))
    recovery_dag = np.conj(np.transpose(recovery, (0, 2, 1)))

    left = np.einsum("mij,ajk,mkl->mail", recovery, frame_dag, frame_dag, optimize=True)
    right = np.einsum("mij,bjk,mkl->mbil", frame, frame, recovery_dag, optimize=True)

    lam = np.einsum("ab,maij,mblk->ikjl", weights, left, right, optimize=True)
    return lam.reshape(d * d, d * d) / n


def single_channel_superoperator(
    chi: np.ndarray, recovery: Optional[np.ndarray] = None
) -> np.ndarray:
    """4x4 transfer matrix of T1 for resource chi; Pauli recovery gives T0."""
    chi = validate_density_matrix(chi)
    recovery = pauli_recovery(1) if recovery is None else validate_recovery(recovery, 1)
    return _transfer_matrix(bell_overlap_matrix(chi), pauli_stack(), recovery)


def bichannel_superoperator(
    xi: np.ndarray, a: AngleLike, recovery: Optional[np.ndarray] = None
) -> np.ndarray:
    """16x16 transfer matrix of E1 for resource Xi; Pauli-pair recovery gives E0."""
    xi = validate_density_matrix(xi)
    recovery = pauli_recovery(2) if recovery is None else validate_recovery(recovery, 2)
    return _transfer_matrix(upsilon_overlap_matrix(xi, a), pauli_pair_stack(), recovery)


def apply_superoperator(lam: np.ndarray, rho: np.ndarray) -> np.ndarray:
    d = rho.shape[0]
    if lam.shape != (d * d, d * d):
        raise ValueError(f"transfer matrix {lam.shape} does not act on dimension {d}")
    return (lam @ np.asarray(rho).reshape(d * d)).reshape(d, d)


def _pauli_mixture(weights: np.ndarray, frame: np.ndarray, rho: np.ndarray) -> np.ndarray:
    """sum_m w_m F_m^dagger rho F_m."""
    frame_dag = np.conj(np.transpose(frame, (0, 2, 1)))
    return np.einsum("m,mij,jk,mkl->il", weights, frame_dag, rho, frame)


def channel_T0(chi: np.ndarray, rho_in: np.ndarray) -> np.ndarray:
    """
    Standard single-qubit teleportation with resource chi.

    Args:
        chi: Two-qubit resource (A, B)
        rho_in: Single-qubit input

    Returns:
        sum_mu <Psi^mu|chi|Psi^mu> u^mu^dagger rho_in u^mu
    """
    chi = validate_density_matrix(chi)
    rho_in = validate_density_matrix(rho_in)
    weights = np.real(np.diag(bell_overlap_matrix(chi)))
    return _pauli_mixture(weights, pauli_stack(), rho_in)


def channel_T1(chi: np.ndarray, rho_in: np.ndarray, recovery: np.ndarray) -> np.ndarray:
    """Single-qubit teleportation where Bob applies r^mu after outcome mu."""
    rho_in = validate_density_matrix(rho_in)
    return apply_superoperator(single_channel_superoperator(chi, recovery), rho_in)


def bichannel_E0(xi: np.ndarray, rho_in: np.ndarray, a: AngleLike) -> np.ndarray:
    """
    Two-qubit teleportation through the four-qubit resource Xi, measuring in
    the Pi(a) basis and undoing U^{mu nu}.

    Returns:
        sum_{mu nu} <Upsilon^{mu nu}|Xi|Upsilon^{mu nu}> U^{mu nu dagger} rho_in U^{mu nu}
    """
    xi = validate_density_matrix(xi)
    rho_in = validate_density_matrix(rho_in)
    weights = np.real(np.diag(upsilon_overlap_matrix(xi, a)))
    return _pauli_mixture(weights, pauli_pair_stack(), rho_in)


def bichannel_E1(
    xi: np.ndarray, rho_in: np.ndarray, a: AngleLike, recovery: np.ndarray
) -> np.ndarray:
    """Two-qubit teleportation with an arbitrary recovery set R^{mu nu}."""
    rho_in = validate_density_matrix(rho_in)
    return apply_superoperator(bichannel_superoperator(xi, a, recovery), rho_in)
