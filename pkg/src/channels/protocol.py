"""
Six-Qubit Protocol Oracle
Brute-force simulation of the full teleportation protocol on A1 A2 A3 A4 B1 B2,
plus the coefficient-matrix identities that connect it to the bichannel form.

The oracle never uses the bichannel formulas: it builds the 64-dimensional
state, projects Alice's four qubits onto each |Pi^{mu nu}(a)>, normalizes via
the explicit outcome probability and applies Bob's recovery. Agreement with
bichannel_E1 is the mutual check between the two constructions.

Example usage:
    xi = sample_random("density", 16, RandomStream(seed=7), rank=3)
    records, rho_out = protocol_oracle(xi, input_state(0.4), (0.1, -0.3))
    residuals = trace_identity_residuals(xi, (0.1, -0.3))
"""

from typing import List, Optional, Tuple

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..core.linalg import (
    dagger,
    hermitian_eigh,
    validate_density_matrix,
    validate_state_vector,
)
from ..core.tolerances import ENSEMBLE_DROP_TOL, ZERO_PROBABILITY_TOL
from ..states.factory import AngleLike, as_angle_pair, pi_basis, upsilon, upsilon_basis
from ..states.operators import (
    PAULI_PAIRS,
    pauli_pair,
    pauli_recovery,
    rotation_S,
    rotation_T,
    validate_recovery,
)

logger = logging.getLogger("channels.protocol")

Ensemble = Tuple[np.ndarray, np.ndarray]


class OutcomeRecord(BaseModel):
    """One of Alice's sixteen measurement outcomes."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    outcome: Tuple[int, int]
    probability: float = Field(ge=0.0, le=1.0 + 1e-9)
    conditional_state: Optional[np.ndarray] = None
    zero_probability: bool = False


class TraceIdentityResiduals(BaseModel):
    """Max-entry residuals of the coefficient-matrix overlap identity."""

    model_config = ConfigDict(frozen=True)

    consistent: float
    printed: float


def resource_ensemble(xi: np.ndarray) -> Ensemble:
    """
    Eigen-ensemble of Xi.

    Returns:
        (weights p_lambda, vectors as columns); weights below ENSEMBLE_DROP_TOL
        are dropped and the rest renormalized
    """
    values, vectors = hermitian_eigh(xi)
    keep = values > ENSEMBLE_DROP_TOL
    weights = values[keep]
    return weights / weights.sum(), vectors[:, keep]


def coefficient_matrix(xi_vec: np.ndarray) -> np.ndarray:
    """
    C with |xi> = sum C_{mn,kl} |kl>_{A3A4} (x) |mn>_{B1B2}.

    Row index mn (B1B2), column index kl (A3A4).
    """
    xi_vec = np.asarray(xi_vec)
    if xi_vec.shape != (16,):
        raise ValueError("coefficient_matrix expects a 16-dimensional vector")
    return xi_vec.reshape(4, 4).T


def protocol_oracle(
    xi: np.ndarray,
    psi_in: np.ndarray,
    a: AngleLike,
    recovery: Optional[np.ndarray] = None,
    ensemble: Optional[Ensemble] = None,
) -> Tuple[List[OutcomeRecord], np.ndarray]:
    """
    Run the protocol outcome by outcome.

    Args:
        xi: Resource on A3 A4 B1 B2
        psi_in: Pure input on A1 A2
        a: Measurement angles
        recovery: (16, 4, 4) recovery set, Pauli pairs by default
        ensemble: Optional (weights, column vectors) decomposition of xi; the
            eigen-ensemble is used when omitted

    Returns:
        (sixteen outcome records, outcome-averaged state of B1 B2)
    """
    xi = validate_density_matrix(xi)
    psi_in = validate_state_vector(psi_in)
    if psi_in.shape != (4,):
        raise ValueError("protocol_oracle expects a two-qubit input")
    recovery = pauli_recovery(2) if recovery is None else validate_recovery(recovery, 2)
    weights, vectors = resource_ensemble(xi) if ensemble is None else ensemble

    measurement = pi_basis(a)
    # (lambda, A1A2A3A4, B1B2) amplitude blocks of |Psi_in> (x) |xi_lambda>.
    blocks = np.stack(
        [np.kron(psi_in, vectors[:, k]).reshape(16, 4) for k in range(len(weights))]
    )

    records: List[OutcomeRecord] = []
    averaged = np.zeros((4, 4), dtype=complex)
    for index, p in enumerate(PAULI_PAIRS):
        bob = np.einsum("a,lab->lb", measurement[:, index].conj(), blocks)
        unnormalized = np.einsum("l,li,lj->ij", weights, bob, bob.conj())
        probability = float(np.real(np.trace(unnormalized)))

        if probability < ZERO_PROBABILITY_TOL:
            logger.warning(f"Outcome {p} has probability {probability:.3e}; excluded")
            records.append(
                OutcomeRecord(outcome=p, probability=max(probability, 0.0), zero_probability=True)
            )
            continue

        r = recovery[index]
        conditional = r @ unnormalized @ dagger(r) / probability
        records.append(
            OutcomeRecord(outcome=p, probability=probability, conditional_state=conditional)
        )
        averaged += probability * conditional

    total = sum(rec.probability for rec in records)
    logger.debug(f"Outcome probabilities sum to {total:.15f}")
    return records, averaged


def _eigen_ensemble_overlaps(
    xi: np.ndarray, a: AngleLike, ensemble: Optional[Ensemble]
) -> Tuple[np.ndarray, np.ndarray]:
    """Overlap matrix from the two trace forms, consistent and as printed."""
    a = as_angle_pair(a)
    weights, vectors = resource_ensemble(xi) if ensemble is None else ensemble
    s = rotation_S(a.theta, a.phi)
    t = rotation_T(0.0, 0.0)
    s_t_inv = s @ t.T
    t_s_inv = t @ s.T

    pairs = [pauli_pair(p) for p in PAULI_PAIRS]
    consistent = np.zeros((16, 16), dtype=complex)
    printed = np.zeros((16, 16), dtype=complex)
    for p_lambda, vec in zip(weights, vectors.T):
        c = coefficient_matrix(vec)
        left = c @ s_t_inv
        right = t_s_inv @ dagger(c)
        left_plain = np.array([np.trace(u @ left) for u in pairs])
        left_dag = np.array([np.trace(dagger(u) @ left) for u in pairs])
        right_plain = np.array([np.trace(u @ right) for u in pairs])
        right_dag = np.array([np.trace(dagger(u) @ right) for u in pairs])
        consistent += p_lambda * np.outer(left_plain, right_dag) / 4
        printed += p_lambda * np.outer(left_dag, right_plain) / 4
    return consistent, printed


def trace_identity_residuals(
    xi: np.ndarray, a: AngleLike, ensemble: Optional[Ensemble] = None
) -> TraceIdentityResiduals:
    """
    Compare <Upsilon^{ab}|Xi|Upsilon^{cd}> with the coefficient-matrix trace form.

    ``consistent`` uses tr[U^{ab} C S T^-1] tr[U^{cd dagger} T S^-1 C^dagger];
    ``printed`` moves the daggers to tr[U^{ab dagger} ...] tr[U^{cd} ...].
    """
    basis = upsilon_basis(a)
    direct = dagger(basis) @ xi @ basis
    consistent, printed = _eigen_ensemble_overlaps(xi, a, ensemble)
    return TraceIdentityResiduals(
        consistent=float(np.max(np.abs(direct - consistent))),
        printed=float(np.max(np.abs(direct - printed))),
    )


def recovery_trace_residual(recovery: np.ndarray, a: AngleLike) -> float:
    """
    Max residual of the two recovery trace identities

        tr[R U^{ab dagger} U^{mn dagger}] = 4 <Upsilon^00|(I (x) U^{mn dagger} R)|Upsilon^{ab}>
        tr[U^{mn} U^{cd} R^dagger]        = 4 <Upsilon^{cd}|(I (x) R^dagger U^{mn})|Upsilon^00>

    over all outcomes mn and all basis labels.
    """
    recovery = validate_recovery(recovery, 2)
    base = upsilon(a)
    basis = upsilon_basis(a)
    pairs = [pauli_pair(p) for p in PAULI_PAIRS]

    worst = 0.0
    for m, (u_mn, r) in enumerate(zip(pairs, recovery)):
        first_op = np.kron(np.eye(4), dagger(u_mn) @ r)
        second_op = np.kron(np.eye(4), dagger(r) @ u_mn)
        first_rhs = 4 * (base.conj() @ first_op @ basis)
        second_rhs = 4 * (basis.conj().T @ second_op @ base)
        first_lhs = np.array([np.trace(r @ dagger(u) @ dagger(u_mn)) for u in pairs])
        second_lhs = np.array([np.trace(u_mn @ u @ dagger(r)) for u in pairs])
        worst = max(
            worst,
            float(np.max(np.abs(first_lhs - first_rhs))),
            float(np.max(np.abs(second_lhs - second_rhs))),
        )
    return worst
