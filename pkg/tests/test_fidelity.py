"""Tests for analytic and Monte Carlo teleportation fidelities."""

import numpy as np
import pytest

from src.channels.teleport import bichannel_superoperator, single_channel_superoperator
from src.core.linalg import projector
from src.core.sampling import RandomStream, ginibre_density, haar_unitary
from src.metrics import closed_forms as cf
from src.metrics.fidelity import (
    METRIC_CONTEXT,
    fidelity_pair,
    fidelity_single,
    haar_two_design_check,
    monte_carlo_fidelity,
    singlet_fraction,
)
from src.metrics.optimize import upsilon_overlap
from src.states.factory import named_state, upsilon
from src.states.operators import bell, pauli_pair


def test_metric_context_thresholds():
    assert METRIC_CONTEXT.classical_fidelity_1q == pytest.approx(2 / 3)
    assert METRIC_CONTEXT.classical_fidelity_2q == pytest.approx(3 / 5)
    assert METRIC_CONTEXT.conjecture_threshold == 0.25


def test_single_fidelity_with_pauli_recovery(rng):
    for rank in (1, 2, 4):
        chi = ginibre_density(rng, 4, rank)
        assert fidelity_single(chi) == pytest.approx(
            cf.single_fidelity_from_overlap(singlet_fraction(chi)), abs=1e-14
        )
    assert fidelity_single(projector(bell(0))) == pytest.approx(1.0)


def test_pair_fidelity_with_pauli_recovery(rng):
    for _ in range(50):
        xi = ginibre_density(rng, 16, int(rng.integers(1, 17)))
        a = tuple(rng.uniform(-np.pi / 2 + 0.01, np.pi / 2 - 0.01, size=2))
        overlap = upsilon_overlap(xi, *a)
        assert fidelity_pair(xi, a) == pytest.approx(
            cf.pair_fidelity_from_overlap(overlap), abs=1e-12
        )
    a = (0.3, -0.7)
    assert fidelity_pair(projector(upsilon(a)), a) == pytest.approx(1.0)
    assert fidelity_pair(named_state("Smolin"), (0.0, 0.0)) == pytest.approx(0.4)


@pytest.mark.parametrize("p", [0.0, 0.25, 0.7])
def test_pair_fidelity_is_affine_in_the_resource(rng, random_recovery, p):
    first, second = ginibre_density(rng, 16, 16), ginibre_density(rng, 16, 2)
    mixed = p * first + (1 - p) * second
    a = (0.9, -0.3)
    for recovery in (None, random_recovery):
        expected = p * fidelity_pair(first, a, recovery) + (1 - p) * fidelity_pair(
            second, a, recovery
        )
        assert fidelity_pair(mixed, a, recovery) == pytest.approx(expected, abs=1e-12)


def test_monte_carlo_single_fidelity(rng, stream):
    chi = ginibre_density(rng, 4, 4)
    recovery = np.stack([haar_unitary(rng, 2) for _ in range(4)])
    estimate = monte_carlo_fidelity(
        single_channel_superoperator(chi, recovery), 2, 20_000, stream
    )
    assert estimate.agrees_with(fidelity_single(chi, recovery))


def test_monte_carlo_pair_fidelity(random_resource, random_recovery, stream):
    a = (0.9, -0.3)
    estimate = monte_carlo_fidelity(
        bichannel_superoperator(random_resource, a, random_recovery), 4, 20_000, stream
    )
    assert estimate.samples == 20_000
    assert estimate.agrees_with(fidelity_pair(random_resource, a, random_recovery))


def test_monte_carlo_is_reproducible(random_resource):
    lam = bichannel_superoperator(random_resource, (0.0, 0.0))
    first = monte_carlo_fidelity(lam, 4, 500, RandomStream(seed=3, stream_id=1))
    second = monte_carlo_fidelity(lam, 4, 500, RandomStream(seed=3, stream_id=1))
    assert first == second


def test_monte_carlo_argument_checks(random_resource, stream):
    lam = bichannel_superoperator(random_resource, (0.0, 0.0))
    with pytest.raises(ValueError):
        monte_carlo_fidelity(lam, 4, 1, stream)
    with pytest.raises(ValueError):
        monte_carlo_fidelity(lam, 2, 100, stream)


def test_two_design_analytic_values(stream):
    identity = np.eye(4)
    check = haar_two_design_check(identity, identity, 1000, stream)
    assert check.analytic == pytest.approx((1.0, 0.0))

    u = pauli_pair((1, 1))
    check = haar_two_design_check(u, u.conj().T, 5000, stream)
    assert check.analytic == pytest.approx((0.2, 0.0))
    assert check.within(4.0)


def test_two_design_random_operators(rng, stream):
    a_op, b_op = haar_unitary(rng, 4), haar_unitary(rng, 4)
    check = haar_two_design_check(a_op, b_op, 20_000, stream)
    assert check.within(4.0)


def test_two_design_needs_enough_samples(stream):
    with pytest.raises(ValueError):
        haar_two_design_check(np.eye(4), np.eye(4), 999, stream)
    with pytest.raises(ValueError):
        haar_two_design_check(np.eye(4), np.eye(2), 1000, stream)
