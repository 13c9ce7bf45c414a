"""
Entanglement Measures
Negativity across a cut and the three four-qubit SLOCC filter expectations.

The filters are built from five 4x4 "E-tensors": Pauli-string expectation
values with two free slots and sigma_y in the other two, lowered with the
metric g = diag(-1, 1, 0, 1). sigma_y is the Hermitian one, so every E entry
is real.

Example usage:
    cut = SubsystemMask.of(4, [0])
    print(negativity(named_state("Smolin"), cut))
    print(filter_expectations(named_vector("GHZ4")))
"""

from typing import Dict, Tuple

import math

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..channels.teleport import bichannel_E0
from ..core.linalg import (
    SubsystemMask,
    partial_transpose,
    projector,
    trace_norm,
    validate_state_vector,
)
from ..states.factory import AngleLike, input_state
from ..states.operators import hermitian_pauli

METRIC = np.array([-1.0, 1.0, 0.0, 1.0])

# Free slots of each E-tensor; the other two carry sigma_y.
FILTER_SLOTS: Dict[str, Tuple[int, int]] = {
    "alpha": (0, 1),
    "beta": (0, 2),
    "gamma": (1, 2),
    "delta": (1, 3),
    "epsilon": (2, 3),
}

OUTPUT_CUT = SubsystemMask.of(2, [1])


class FilterValues(BaseModel):
    model_config = ConfigDict(frozen=True)

    f1: float
    f2: float
    f3: float

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.f1, self.f2, self.f3)


def negativity(rho: np.ndarray, cut: SubsystemMask) -> float:
    """||rho^{T_cut}||_1 - 1 (twice the sum of negative eigenvalues)."""
    return trace_norm(partial_transpose(rho, cut)) - 1.0


def teleported_negativity(xi: np.ndarray, a: AngleLike, epsilon: float) -> float:
    """Negativity of cos(eps)|00> + sin(eps)|11> after the E0 bichannel."""
    rho_in = projector(input_state(epsilon))
    return negativity(bichannel_E0(xi, rho_in, a), OUTPUT_CUT)


def e_tensor(psi: np.ndarray, slots: Tuple[int, int]) -> np.ndarray:
    """E^{ij} = <psi| ... sigma^i ... sigma^j ... |psi> with sigma_y elsewhere."""
    sigma_y = hermitian_pauli(2)
    e = np.zeros((4, 4))
    for i in range(4):
        for j in range(4):
            factors = [sigma_y] * 4
            factors[slots[0]] = hermitian_pauli(i)
            factors[slots[1]] = hermitian_pauli(j)
            op = factors[0]
            for f in factors[1:]:
                op = np.kron(op, f)
            e[i, j] = np.real(np.vdot(psi, op @ psi))
    return e


def filter_expectations(psi: np.ndarray) -> FilterValues:
    """
    Third-, fourth- and sixth-order filter expectations of a four-qubit state.

    Args:
        psi: Normalized 16-dimensional state vector

    Returns:
        FilterValues(f1, f2, f3)
    """
    psi = validate_state_vector(psi)
    if psi.shape != (16,):
        raise ValueError("filter_expectations expects a four-qubit state")

    e = {name: e_tensor(psi, slots) for name, slots in FILTER_SLOTS.items()}
    g = METRIC

    f1 = np.einsum("i,j,k,ij,ik,jk->", g, g, g, e["alpha"], e["beta"], e["gamma"])
    f2 = np.einsum(
        "i,j,k,l,ij,ik,jl,kl->",
        g, g, g, g,
        e["alpha"], e["beta"], e["delta"], e["epsilon"],
    )

    def norm(t: np.ndarray) -> float:
        return float(np.einsum("i,j,ij,ij->", g, g, t, t))

    f3 = 0.5 * norm(e["alpha"]) * norm(e["beta"]) * norm(e["gamma"])
    return FilterValues(f1=float(f1), f2=float(f2), f3=float(f3))


def epsilon_grid(points: int) -> np.ndarray:
    """Uniform grid on [0, pi/2]."""
    if points < 2:
        raise ValueError("grid needs at least two points")
    return np.linspace(0.0, math.pi / 2, points)
