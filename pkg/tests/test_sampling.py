"""Tests for seeded random sampling."""

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from src.core.sampling import (
    RandomStream,
    ginibre_density,
    haar_pure_states,
    haar_unitary,
    sample_random,
)


def test_same_stream_reproduces_draws():
    a = sample_random("density", 16, RandomStream(seed=7, stream_id=3))
    b = sample_random("density", 16, RandomStream(seed=7, stream_id=3))
    assert_array_equal(a, b)


def test_substreams_differ_and_are_reproducible():
    root = RandomStream(seed=7)
    first = root.substream(1).generator().random(4)
    second = root.substream(2).generator().random(4)
    again = RandomStream(seed=7).substream(1).generator().random(4)
    assert not np.allclose(first, second)
    assert_array_equal(first, again)


def test_seed_range_is_checked():
    with pytest.raises(ValueError):
        RandomStream(seed=-1)
    RandomStream(seed=2**64 - 1)


def test_haar_states_are_normalized(rng):
    psi = haar_pure_states(rng, 4, 100)
    assert psi.shape == (100, 4)
    assert_allclose(np.linalg.norm(psi, axis=1), 1.0, atol=1e-14)


def test_haar_unitary_is_unitary(rng):
    u = haar_unitary(rng, 4)
    assert_allclose(u.conj().T @ u, np.eye(4), atol=1e-13)


@pytest.mark.parametrize("rank", [1, 3, 16])
def test_ginibre_density_has_requested_rank(rng, rank):
    rho = ginibre_density(rng, 16, rank)
    assert np.trace(rho).real == pytest.approx(1.0)
    values = np.linalg.eigvalsh(rho)
    assert values.min() > -1e-12
    assert int(np.sum(values > 1e-10)) == rank


def test_ginibre_rank_is_checked(rng):
    with pytest.raises(ValueError):
        ginibre_density(rng, 4, 5)


def test_unknown_sample_kind(stream):
    with pytest.raises(ValueError):
        sample_random("mixed", 4, stream)
