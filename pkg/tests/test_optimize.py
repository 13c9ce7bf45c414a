"""Tests for the angle and unitary searches."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.channels.teleport import upsilon_overlap_matrix
from src.core.linalg import projector
from src.core.sampling import RandomStream, ginibre_density, haar_unitary
from src.metrics.optimize import (
    DEFAULT_SETTINGS,
    OptimizerSettings,
    generalized_singlet_fraction,
    hermitian_basis,
    max_generalized_singlet_fraction,
    max_singlet_fraction,
    params_from_unitary,
    unitary_from_params,
)
from src.states.factory import named_state, upsilon
from src.states.operators import bell, pauli_pair


@pytest.mark.parametrize("a", [(0.3, -0.7), (-1.2, 0.5), (0.9, 0.9)])
def test_gsf_of_pure_upsilon_is_one_at_its_angles(a):
    result = generalized_singlet_fraction(projector(upsilon(a)))
    assert result.value == pytest.approx(1.0, abs=1e-12)
    assert_allclose(result.argmax_angles.as_tuple(), a, atol=1e-6)
    assert result.fidelity == pytest.approx(1.0, abs=1e-12)
    assert result.certified


def test_gsf_reports_flat_directions():
    # <Upsilon^00|GHZ4|Upsilon^00> = cos^2(theta)/2 does not depend on phi.
    result = generalized_singlet_fraction(named_state("GHZ4"))
    assert result.value == pytest.approx(0.5, abs=1e-12)
    assert "phi" in result.flat_directions
    assert result.argmax_angles.phi == 0.0
    assert result.argmax_angles.theta == pytest.approx(0.0, abs=1e-6)


def test_gsf_rejects_two_qubit_states():
    with pytest.raises(ValueError):
        generalized_singlet_fraction(np.eye(4) / 4)


def test_settings_from_config():
    settings = OptimizerSettings.from_config(
        {"optimizer": {"grid_points": 21, "unknown": 1}, "rng": {"seed": 9}}
    )
    assert settings.grid_points == 21
    assert settings.seed == 9
    assert DEFAULT_SETTINGS.grid_points == 61


def test_unitary_parametrization_round_trip(rng):
    basis = hermitian_basis(2)
    u = haar_unitary(rng, 4)
    assert_allclose(unitary_from_params(params_from_unitary(u, basis), basis), u, atol=1e-10)


def test_gsf_max_dominates_gsf_and_pauli_overlaps(rng, fast_settings):
    xi = ginibre_density(rng, 16, 16)
    g = generalized_singlet_fraction(xi, fast_settings)
    bound = float(np.max(np.real(np.diag(upsilon_overlap_matrix(xi, g.argmax_angles)))))
    result = max_generalized_singlet_fraction(
        xi, stream=RandomStream(seed=5), settings=fast_settings
    )
    assert result.value >= g.value - 1e-12
    assert result.value >= bound - 1e-12
    assert result.value <= float(np.linalg.eigvalsh(xi).max()) + 1e-12
    assert not result.certified
    assert_allclose(
        result.argmax_unitary.conj().T @ result.argmax_unitary, np.eye(4), atol=1e-10
    )


def test_gsf_max_of_smolin_is_a_quarter(fast_settings):
    result = max_generalized_singlet_fraction(
        named_state("Smolin"), stream=RandomStream(seed=1), settings=fast_settings
    )
    assert result.value == pytest.approx(0.25, abs=1e-6)


def test_gsf_max_is_reproducible(rng, fast_settings):
    xi = ginibre_density(rng, 16, 4)
    first = max_generalized_singlet_fraction(xi, stream=RandomStream(seed=2), settings=fast_settings)
    second = max_generalized_singlet_fraction(xi, stream=RandomStream(seed=2), settings=fast_settings)
    assert first.value == second.value


@pytest.mark.slow
def test_gsf_max_undoes_a_local_rotation(rng):
    a = (0.4, -0.9)
    psi = np.kron(np.eye(4), haar_unitary(rng, 4)) @ upsilon(a)
    result = max_generalized_singlet_fraction(
        projector(psi), stream=RandomStream(seed=11), stop_above=1.0 - 1e-9
    )
    assert result.value == pytest.approx(1.0, abs=1e-6)


def test_max_singlet_fraction_of_rotated_bell(rng, fast_settings):
    u = haar_unitary(rng, 2)
    chi = projector(np.kron(np.eye(2), u) @ bell(0))
    result = max_singlet_fraction(chi, stream=RandomStream(seed=4), settings=fast_settings)
    assert result.value == pytest.approx(1.0, abs=1e-8)
    assert result.fidelity == pytest.approx(1.0, abs=1e-8)


def _relabel(xi, p):
    u = np.kron(np.eye(4), pauli_pair(p))
    return u.conj().T @ xi @ u


@pytest.mark.parametrize("p", [(0, 1), (2, 3), (3, 2)])
def test_gsf_of_relabelled_resource_is_the_shifted_optimum(random_resource, p):
    # The relabelled G maximizes the mu nu diagonal of the original overlaps.
    k = 4 * p[0] + p[1]

    def shifted(a):
        return float(np.real(upsilon_overlap_matrix(random_resource, a)[k, k]))

    result = generalized_singlet_fraction(_relabel(random_resource, p))
    assert shifted(result.argmax_angles.as_tuple()) == pytest.approx(result.value, abs=1e-9)
    axis = np.linspace(-1.5, 1.5, 13)
    best_on_grid = max(shifted((float(t), float(f))) for t in axis for f in axis)
    assert best_on_grid <= result.value + 1e-9


@pytest.mark.parametrize("p", [(1, 0), (2, 2), (3, 1)])
def test_relabelling_restores_a_shifted_upsilon(p):
    a = (0.4, -0.6)
    xi = projector(upsilon(a, p))
    assert generalized_singlet_fraction(xi).value < 1.0 - 1e-3
    result = generalized_singlet_fraction(_relabel(xi, p))
    assert result.value == pytest.approx(1.0, abs=1e-9)
    assert_allclose(result.argmax_angles.as_tuple(), a, atol=1e-6)
