"""Tests for register linear algebra."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.core.linalg import (
    SubsystemMask,
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
from src.core.sampling import ginibre_density
from src.states.operators import bell


def test_mask_indices_and_complement():
    mask = SubsystemMask.of(4, [0, 2])
    assert mask.indices == (0, 2)
    assert mask.complement == (1, 3)
    assert mask.is_proper()


def test_mask_rejects_out_of_range_qubit():
    with pytest.raises(ValueError):
        SubsystemMask.of(2, [2])


def test_num_qubits_requires_power_of_two():
    assert num_qubits(16) == 4
    with pytest.raises(ValueError):
        num_qubits(6)


def test_tensor_product_index_convention():
    a = np.arange(4).reshape(2, 2)
    b = np.arange(4, 8).reshape(2, 2)
    out = tensor_product(a, b)
    assert out[1 * 2 + 0, 0 * 2 + 1] == a[1, 0] * b[0, 1]


def test_tensor_product_rejects_mixed_ranks():
    with pytest.raises(ValueError):
        tensor_product(np.ones(2), np.eye(2))


def test_partial_trace_of_bell_state_is_maximally_mixed():
    rho = projector(bell(0))
    assert_allclose(partial_trace(rho, SubsystemMask.of(2, [0])), np.eye(2) / 2, atol=1e-15)
    assert_allclose(partial_trace(rho, SubsystemMask.of(2, [1])), np.eye(2) / 2, atol=1e-15)


def test_partial_trace_keeps_product_factor(rng):
    a = ginibre_density(rng, 2, 2)
    b = ginibre_density(rng, 4, 4)
    rho = np.kron(a, b)
    assert_allclose(partial_trace(rho, SubsystemMask.of(3, [0])), a, atol=1e-14)
    assert_allclose(partial_trace(rho, SubsystemMask.of(3, [1, 2])), b, atol=1e-14)


def test_partial_trace_rejects_degenerate_mask():
    with pytest.raises(ValueError, match="degenerate partial trace"):
        partial_trace(np.eye(4) / 4, SubsystemMask.of(2, [0, 1]))


def test_partial_transpose_is_an_involution(random_resource):
    mask = SubsystemMask.of(4, [1, 3])
    twice = partial_transpose(partial_transpose(random_resource, mask), mask)
    assert_allclose(twice, random_resource, atol=0)


def test_partial_transpose_of_bell_state_has_negative_eigenvalue():
    pt = partial_transpose(projector(bell(0)), SubsystemMask.of(2, [1]))
    assert_allclose(hermitian_spectrum(pt), [-0.5, 0.5, 0.5, 0.5], atol=1e-14)


def test_trace_norm_is_sum_of_absolute_eigenvalues():
    h = np.diag([1.0, -2.0, 0.5, 0.0]).astype(complex)
    assert trace_norm(h) == pytest.approx(3.5)


def test_hermitian_spectrum_rejects_non_hermitian():
    with pytest.raises(ValueError, match="not Hermitian"):
        hermitian_spectrum(np.array([[0, 1], [0, 0]], dtype=complex))


def test_ket_bit_order():
    assert ket("01")[1] == 1
    with pytest.raises(ValueError):
        ket("012")


def test_validators():
    validate_state_vector(ket("0000"))
    with pytest.raises(ValueError):
        validate_state_vector(2 * ket("00"))
    with pytest.raises(ValueError):
        validate_density_matrix(np.diag([1.5, -0.5]).astype(complex))
    with pytest.raises(ValueError):
        validate_density_matrix(np.eye(2))
    with pytest.raises(ValueError):
        validate_unitary(np.array([[1, 1], [0, 1]], dtype=complex))
