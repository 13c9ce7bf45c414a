"""
Teleportation Fidelities
Singlet fractions, analytic teleportation fidelities, Haar Monte Carlo
estimates of the same averages and the two-design integration identity.

Example usage:
    lam = bichannel_superoperator(xi, a)
    analytic = fidelity_pair(xi, a, pauli_recovery(2))
    estimate = monte_carlo_fidelity(lam, 4, 100_000, RandomStream(seed=1))
    assert abs(estimate.mean - analytic) <= 4 * estimate.standard_error
"""

from typing import Optional, Tuple

import logging

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..core.linalg import dagger, validate_density_matrix
from ..core.sampling import RandomStream, haar_pure_states
from ..states.factory import AngleLike, upsilon
from ..states.operators import (
    bell,
    pauli_pair_stack,
    pauli_recovery,
    pauli_stack,
    validate_recovery,
)
from .optimize import max_generalized_singlet_fraction, max_singlet_fraction

logger = logging.getLogger("metrics.fidelity")

MIN_TWO_DESIGN_SAMPLES = 1000
MC_CHUNK = 20_000


class MetricContext(BaseModel):
    """Fixed thresholds used when judging resources."""

    model_config = ConfigDict(frozen=True)

    classical_fidelity_1q: float = 2.0 / 3.0
    classical_fidelity_2q: float = 3.0 / 5.0
    g_crit: float = 0.5
    conjecture_threshold: float = 0.25


METRIC_CONTEXT = MetricContext()


class MonteCarloEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    mean: float
    standard_error: float
    samples: int = Field(ge=1)

    def agrees_with(self, value: float, sigmas: float = 4.0) -> bool:
        return abs(self.mean - value) <= sigmas * self.standard_error


class TwoDesignCheck(BaseModel):
    """Analytic vs empirical Haar average of <Psi|A|Psi><Psi|B|Psi> as (re, im)."""

    model_config = ConfigDict(frozen=True)

    analytic: Tuple[float, float]
    empirical: Tuple[float, float]
    standard_error: float
    samples: int

    @property
    def deviation(self) -> float:
        return float(
            np.hypot(
                self.empirical[0] - self.analytic[0],
                self.empirical[1] - self.analytic[1],
            )
        )

    def within(self, sigmas: float = 4.0) -> bool:
        return self.deviation <= sigmas * self.standard_error


def singlet_fraction(chi: np.ndarray) -> float:
    """<Psi^0_Bell| chi |Psi^0_Bell>."""
    chi = validate_density_matrix(chi)
    phi = bell(0)
    return float(np.real(np.vdot(phi, chi @ phi)))


def fidelity_single(chi: np.ndarray, recovery: Optional[np.ndarray] = None) -> float:
    """
    Average fidelity of T1 with resource chi and recovery r^mu.

    Args:
        chi: Two-qubit resource
        recovery: (4, 2, 2) recovery set, Paulis by default

    Returns:
        1/3 + (1/6) sum_mu <Psi^0|(I (x) u^mu^dagger r^mu) chi (I (x) r^mu^dagger u^mu)|Psi^0>
    """
    chi = validate_density_matrix(chi)
    recovery = pauli_recovery(1) if recovery is None else validate_recovery(recovery, 1)
    phi = bell(0)
    vectors = np.stack(
        [np.kron(np.eye(2), dagger(r) @ u) @ phi for u, r in zip(pauli_stack(), recovery)],
        axis=1,
    )
    total = np.real(np.trace(dagger(vectors) @ chi @ vectors))
    return float(1.0 / 3.0 + total / 6.0)


def fidelity_pair(
    xi: np.ndarray, a: AngleLike, recovery: Optional[np.ndarray] = None
) -> float:
    """
    Average fidelity of E1 with resource Xi, angles a and recovery R^{mu nu}.

    With Pauli-pair recovery this equals 1/5 + (4/5) <Upsilon^00(a)|Xi|Upsilon^00(a)>.
    """
    xi = validate_density_matrix(xi)
    recovery = pauli_recovery(2) if recovery is None else validate_recovery(recovery, 2)
    base = upsilon(a)
    vectors = np.stack(
        [
            np.kron(np.eye(4), dagger(r) @ u) @ base
            for u, r in zip(pauli_pair_stack(), recovery)
        ],
        axis=1,
    )
    total = np.real(np.trace(dagger(vectors) @ xi @ vectors))
    return float(0.2 + total / 20.0)


def monte_carlo_fidelity(
    superop: np.ndarray, dim: int, samples: int, stream: RandomStream
) -> MonteCarloEstimate:
    """
    Haar average of <Psi|Lambda(|Psi><Psi|)|Psi> for a channel given by its
    row-major transfer matrix.
    """
    if samples < 2:
        raise ValueError("monte_carlo_fidelity needs at least two samples")
    if superop.shape != (dim * dim, dim * dim):
        raise ValueError(f"transfer matrix {superop.shape} does not act on dimension {dim}")

    rng = stream.generator()
    values = []
    remaining = samples
    while remaining > 0:
        n = min(MC_CHUNK, remaining)
        psi = haar_pure_states(rng, dim, n)
        rho = np.einsum("ni,nj->nij", psi, psi.conj()).reshape(n, dim * dim)
        out = (rho @ superop.T).reshape(n, dim, dim)
        values.append(np.real(np.einsum("ni,nij,nj->n", psi.conj(), out, psi)))
        remaining -= n

    values = np.concatenate(values)
    estimate = MonteCarloEstimate(
        mean=float(values.mean()),
        standard_error=float(values.std(ddof=1) / np.sqrt(samples)),
        samples=samples,
    )
    logger.debug(f"Monte Carlo fidelity {estimate.mean:.6f} +/- {estimate.standard_error:.2e}")
    return estimate


def haar_two_design_check(
    a_op: np.ndarray, b_op: np.ndarray, samples: int, stream: RandomStream
) -> TwoDesignCheck:
    """
    Haar average of <Psi|A|Psi><Psi|B|Psi> over pure states of C^d.

    The analytic value is (tr A tr B + tr AB) / (d (d + 1)), i.e. /20 for d = 4.
    """
    if samples < MIN_TWO_DESIGN_SAMPLES:
        raise ValueError(f"haar_two_design_check needs at least {MIN_TWO_DESIGN_SAMPLES} samples")
    a_op = np.asarray(a_op, dtype=complex)
    b_op = np.asarray(b_op, dtype=complex)
    if a_op.shape != b_op.shape or a_op.shape[0] != a_op.shape[1]:
        raise ValueError("operators must be square and of equal shape")
    d = a_op.shape[0]

    analytic = (np.trace(a_op) * np.trace(b_op) + np.trace(a_op @ b_op)) / (d * (d + 1))

    psi = haar_pure_states(stream.generator(), d, samples)
    ea = np.einsum("ni,ij,nj->n", psi.conj(), a_op, psi)
    eb = np.einsum("ni,ij,nj->n", psi.conj(), b_op, psi)
    prod = ea * eb
    spread = np.sqrt(prod.real.var(ddof=1) + prod.imag.var(ddof=1))

    return TwoDesignCheck(
        analytic=(float(analytic.real), float(analytic.imag)),
        empirical=(float(prod.real.mean()), float(prod.imag.mean())),
        standard_error=float(spread / np.sqrt(samples)),
        samples=samples,
    )


def optimal_fidelity_single(chi: np.ndarray, **kwargs) -> float:
    """1/3 + 2/3 F_max[chi]."""
    return 1.0 / 3.0 + 2.0 * max_singlet_fraction(chi, **kwargs).value / 3.0


def optimal_fidelity_pair(xi: np.ndarray, **kwargs) -> float:
    """1/5 + 4/5 G_max[Xi]."""
    return 0.2 + 0.8 * max_generalized_singlet_fraction(xi, **kwargs).value
