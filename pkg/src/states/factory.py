"""
State Factory
Constructors for the four-qubit resource states, Alice's measurement basis,
generalized Smolin states, GHZ/W states, input states and the two mixture
families used in the teleportation studies.

Register order is the subscript order: A3 A4 B1 B2 for resources, A1 A2 A3 A4
for the measurement basis. Only the angle differences (theta_12, phi_12) are
exposed; internally theta_2 = phi_2 = 0.

Example usage:
    a = AnglePair(theta=0.3, phi=-0.7)
    ups = upsilon(a, (1, 2))
    xi = iso_mixture(0.3, -0.7, q=0.5)
    ghz = named_state("GHZ4")
"""

from typing import Literal, Tuple, Union

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from ..core.linalg import ket, projector
from .operators import (
    PAULI_PAIRS,
    PauliPairIndex,
    pauli,
    pauli_pair,
    rotation_S,
    rotation_T,
)

NamedStateKind = Literal["GHZ4", "W0", "W1", "Smolin"]


class AnglePair(BaseModel):
    """(theta_12, phi_12), each strictly inside (-pi/2, pi/2)."""

    model_config = ConfigDict(frozen=True)

    theta: float
    phi: float

    @field_validator("theta", "phi")
    @classmethod
    def _inside_open_interval(cls, value: float) -> float:
        if not (-math.pi / 2 < value < math.pi / 2):
            raise ValueError("angle outside open interval (-pi/2, pi/2)")
        return float(value)

    def as_tuple(self) -> Tuple[float, float]:
        return (self.theta, self.phi)


AngleLike = Union[AnglePair, Tuple[float, float]]


def as_angle_pair(a: AngleLike) -> AnglePair:
    if isinstance(a, AnglePair):
        return a
    theta, phi = a
    return AnglePair(theta=theta, phi=phi)


def _check_q(q: float) -> float:
    if not 0.0 <= q <= 1.0:
        raise ValueError("q must lie in [0, 1]")
    return float(q)


def upsilon_amplitudes(theta, phi) -> np.ndarray:
    """
    Real amplitudes of |Upsilon^00(theta, phi)> from the zeta decomposition.

    Accepts scalars or equal-shaped arrays; the last axis of the result has
    length 16. No range checks, so optimizers can call it on raw parameters.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    ct, st = np.cos(theta) / 2, np.sin(theta) / 2
    cp, sp = np.cos(phi) / 2, np.sin(phi) / 2

    amps = np.zeros(theta.shape + (16,))
    amps[..., 0b0000] = ct
    amps[..., 0b0011] = -st
    amps[..., 0b0101] = -sp
    amps[..., 0b0110] = cp
    amps[..., 0b1001] = cp
    amps[..., 0b1010] = sp
    amps[..., 0b1100] = st
    amps[..., 0b1111] = ct
    return amps


def upsilon_zeta(a: AngleLike) -> Tuple[np.ndarray, np.ndarray]:
    """The two orthonormal components with Upsilon^00 = (zeta0 + zeta1)/sqrt(2)."""
    a = as_angle_pair(a)
    ct, st = math.cos(a.theta), math.sin(a.theta)
    cp, sp = math.cos(a.phi), math.sin(a.phi)
    zeta0 = (ct * ket("0000") - st * ket("0011") - sp * ket("0101") + cp * ket("0110"))
    zeta1 = (cp * ket("1001") + sp * ket("1010") + st * ket("1100") + ct * ket("1111"))
    return zeta0 / math.sqrt(2), zeta1 / math.sqrt(2)


def upsilon(a: AngleLike, p: PauliPairIndex = (0, 0)) -> np.ndarray:
    """
    |Upsilon^{mu nu}(a)> on A3 A4 B1 B2.

    Upsilon^00 = (1/2) sum_J |J>_{A3A4} (x) |J'>_{B1B2} with |J> = S|ij>,
    |J'> = T|ij>, J = 2i + j; Upsilon^{mu nu} = (I (x) U^{mu nu dagger}) Upsilon^00.
    """
    a = as_angle_pair(a)
    s = rotation_S(a.theta, a.phi)
    t = rotation_T(0.0, 0.0)

    base = 0.5 * sum(np.kron(s[:, j], t[:, j]) for j in range(4))
    if tuple(p) == (0, 0):
        return base
    return np.kron(np.eye(4), pauli_pair(p).conj().T) @ base


def upsilon_basis(a: AngleLike) -> np.ndarray:
    """All sixteen Upsilon^{mu nu}(a) as columns, flat index 4*mu + nu."""
    return np.column_stack([upsilon(a, p) for p in PAULI_PAIRS])


def pi_state(a: AngleLike, p: PauliPairIndex = (0, 0)) -> np.ndarray:
    """
    |Pi^{mu nu}(a)> on A1 A2 A3 A4: (U^{mu nu} (x) I) applied to
    Pi^00 = (1/2) sum_K |K'>_{A1A2} (x) |K>_{A3A4}.
    """
    a = as_angle_pair(a)
    s = rotation_S(a.theta, a.phi)
    t = rotation_T(0.0, 0.0)

    base = 0.5 * sum(np.kron(t[:, k], s[:, k]) for k in range(4))
    if tuple(p) == (0, 0):
        return base
    return np.kron(pauli_pair(p), np.eye(4)) @ base


def pi_state_expanded(a: AngleLike, p: PauliPairIndex) -> np.ndarray:
    """
    Pi^{mu nu} from the explicit index sum
    (1/2) sum_{ijkl} (u^mu)_{ik} (u^nu)_{jl} U T U^dagger |ij> (x) S |kl>.
    """
    a = as_angle_pair(a)
    mu, nu = p
    u_mu, u_nu = pauli(mu), pauli(nu)
    big_u = pauli_pair(p)
    conjugated_t = big_u @ rotation_T(0.0, 0.0) @ big_u.conj().T
    s = rotation_S(a.theta, a.phi)

    out = np.zeros(16, dtype=complex)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    coeff = u_mu[i, k] * u_nu[j, l]
                    if coeff == 0:
                        continue
                    left = conjugated_t[:, 2 * i + j]
                    right = s[:, 2 * k + l]
                    out += coeff * np.kron(left, right)
    return 0.5 * out


def pi_basis(a: AngleLike) -> np.ndarray:
    """All sixteen Pi^{mu nu}(a) as columns, flat index 4*mu + nu."""
    return np.column_stack([pi_state(a, p) for p in PAULI_PAIRS])


def generalized_smolin(a: AngleLike) -> np.ndarray:
    """Equal mixture of the four (I (x) U^{mu mu dagger}) Upsilon^00(a)."""
    return sum(projector(upsilon(a, (mu, mu))) for mu in range(4)) / 4


def named_vector(kind: NamedStateKind) -> np.ndarray:
    """Pure GHZ4, W0 or W1 state vector."""
    if kind == "GHZ4":
        return (ket("0000") + ket("1111")) / math.sqrt(2)
    w0 = (ket("0001") + ket("0010") + ket("0100") + ket("1000")) / 2
    if kind == "W0":
        return w0
    if kind == "W1":
        flip = np.kron(np.kron(pauli(1), pauli(0)), np.eye(4))
        return flip @ w0
    raise ValueError(f"{kind} has no state vector")


def named_state(kind: NamedStateKind) -> np.ndarray:
    """Density matrix of GHZ4, W0, W1 or the Smolin state."""
    if kind == "Smolin":
        return generalized_smolin((0.0, 0.0))
    if kind in ("GHZ4", "W0", "W1"):
        return projector(named_vector(kind))
    raise ValueError(f"unknown named state: {kind}")


def input_state(epsilon: float) -> np.ndarray:
    """cos(eps)|00> + sin(eps)|11> with 0 <= eps <= pi/2."""
    if not 0.0 <= epsilon <= math.pi / 2:
        raise ValueError("epsilon must lie in [0, pi/2]")
    return math.cos(epsilon) * ket("00") + math.sin(epsilon) * ket("11")


def iso_mixture(alpha: float, beta: float, q: float) -> np.ndarray:
    """q |Upsilon^00(alpha, beta)><.| + (1 - q) I/16."""
    q = _check_q(q)
    pure = projector(upsilon((alpha, beta)))
    return q * pure + (1 - q) * np.eye(16) / 16


def gs_mixture(
    alpha: float, beta: float, gamma: float, delta: float, q: float
) -> np.ndarray:
    """q |Upsilon^00(alpha, beta)><.| + (1 - q) Xi^GS(gamma, delta)."""
    q = _check_q(q)
    pure = projector(upsilon((alpha, beta)))
    return q * pure + (1 - q) * generalized_smolin((gamma, delta))
