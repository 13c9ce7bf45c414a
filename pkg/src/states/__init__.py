"""
States Module
Pauli sets, Bell basis, S/T rotations and every resource state family.
"""

from .factory import (
    AnglePair,
    as_angle_pair,
    generalized_smolin,
    gs_mixture,
    input_state,
    iso_mixture,
    named_state,
    named_vector,
    pi_basis,
    pi_state,
    pi_state_expanded,
    upsilon,
    upsilon_amplitudes,
    upsilon_basis,
    upsilon_zeta,
)
from .operators import (
    PAULI_PAIRS,
    bell,
    bell_basis,
    hermitian_pauli,
    pair_index,
    pauli,
    pauli_pair,
    pauli_pair_stack,
    pauli_recovery,
    rotation_S,
    rotation_T,
)

__all__ = [
    "AnglePair",
    "as_angle_pair",
    "generalized_smolin",
    "gs_mixture",
    "input_state",
    "iso_mixture",
    "named_state",
    "named_vector",
    "pi_basis",
    "pi_state",
    "pi_state_expanded",
    "upsilon",
    "upsilon_amplitudes",
    "upsilon_basis",
    "upsilon_zeta",
    "PAULI_PAIRS",
    "bell",
    "bell_basis",
    "hermitian_pauli",
    "pair_index",
    "pauli",
    "pauli_pair",
    "pauli_pair_stack",
    "pauli_recovery",
    "rotation_S",
    "rotation_T",
]
