"""Tests for negativity, SLOCC filters and the family closed forms."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.core.linalg import SubsystemMask, ket, partial_trace, projector
from src.metrics import closed_forms as cf
from src.metrics.entanglement import (
    epsilon_grid,
    filter_expectations,
    negativity,
    teleported_negativity,
)
from src.metrics.optimize import generalized_singlet_fraction, upsilon_overlap
from src.states.factory import gs_mixture, iso_mixture, named_state, named_vector, upsilon
from src.states.operators import bell

EPSILONS = epsilon_grid(7)
ANGLES = np.linspace(-math.pi / 2 + 0.05, math.pi / 2 - 0.05, 7)


def test_negativity_of_bell_and_product_states():
    cut = SubsystemMask.of(2, [1])
    assert negativity(projector(bell(0)), cut) == pytest.approx(1.0, abs=1e-14)
    assert negativity(projector(ket("01")), cut) == pytest.approx(0.0, abs=1e-14)


def test_epsilon_grid():
    grid = epsilon_grid(3)
    assert_allclose(grid, [0.0, math.pi / 4, math.pi / 2])
    with pytest.raises(ValueError):
        epsilon_grid(1)


def test_filter_closed_forms():
    for t in ANGLES[::2]:
        for p in ANGLES[::2]:
            values = filter_expectations(upsilon((float(t), float(p))))
            assert values.f1 == pytest.approx(cf.filter_f1(t, p), abs=1e-10)
            assert values.f2 == pytest.approx(cf.filter_f2(t, p), abs=1e-10)
            assert values.f3 == pytest.approx(cf.filter_f3(t, p), abs=1e-10)


def test_f3_disagrees_with_quoted_form_at_pi_over_8():
    a = (math.pi / 8, math.pi / 8)
    assert cf.filter_f3_printed(*a) == pytest.approx(0.0, abs=1e-15)
    assert filter_expectations(upsilon(a)).f3 == pytest.approx(5 / 16, abs=1e-12)


@pytest.mark.parametrize("a", [(0.3, 0.3), (0.05, 0.05), (0.4, -1.1)])
def test_f3_is_half_the_product_of_pair_norms(a):
    c2t, c2p = math.cos(2 * a[0]), math.cos(2 * a[1])
    s2t, s2p = math.sin(2 * a[0]), math.sin(2 * a[1])
    alpha = -(2 * (s2t**2 + s2p**2) - (c2t - c2p) ** 2) / 4
    beta = -(1 - c2t * c2p)
    gamma = 2 + c2t * c2p
    f3 = filter_expectations(upsilon(a)).f3
    assert f3 == pytest.approx(0.5 * alpha * beta * gamma, abs=1e-12)
    assert f3 != pytest.approx(cf.filter_f3_printed(*a), abs=1e-3)


def test_f3_vanishes_where_the_alpha_norm_does():
    # theta = 0 with cos(2 phi) = -1/3 zeroes the alpha norm.
    a = (0.0, 0.5 * math.acos(-1 / 3))
    assert filter_expectations(upsilon(a)).f3 == pytest.approx(0.0, abs=1e-12)


def test_ghz_filters():
    values = filter_expectations(named_vector("GHZ4"))
    assert abs(values.f1) == pytest.approx(1.0, abs=1e-12)
    assert values.f2 == pytest.approx(1.0, abs=1e-12)
    assert values.f3 == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("psi", [named_vector("W0"), upsilon((0.0, 0.0))], ids=["w0", "upsilon"])
def test_filters_vanish(psi):
    assert_allclose(filter_expectations(psi).as_tuple(), (0.0, 0.0, 0.0), atol=1e-12)


def test_filters_need_four_qubits():
    with pytest.raises(ValueError):
        filter_expectations(ket("00"))


@pytest.mark.parametrize("q", [0.0, 0.2, 0.5, 0.9, 1.0])
def test_iso_family(q):
    alpha, beta = 0.3, -0.2
    xi = iso_mixture(alpha, beta, q)
    assert upsilon_overlap(xi, 0.7, 0.1) == pytest.approx(
        cf.iso_overlap(0.7, 0.1, alpha, beta, q), abs=1e-14
    )
    assert generalized_singlet_fraction(xi).value == pytest.approx(cf.iso_gsf(q), abs=1e-9)
    for eps in EPSILONS:
        assert teleported_negativity(xi, (alpha, beta), eps) == pytest.approx(
            cf.iso_negativity(q, eps), abs=1e-10
        )


def test_iso_thresholds():
    assert cf.critical_q(cf.iso_gsf, 0.5) == pytest.approx(7 / 15, abs=1e-11)
    assert cf.critical_q(cf.iso_gsf, 0.25) == pytest.approx(0.2, abs=1e-11)
    assert cf.iso_vanishing_q(math.pi / 4) == pytest.approx(1 / 3)
    assert cf.iso_negativity(0.2, math.pi / 4) == 0.0


def test_critical_q_needs_a_sign_change():
    with pytest.raises(ValueError):
        cf.critical_q(cf.iso_gsf, 2.0)


@pytest.mark.parametrize("q", [0.1, 0.4, 0.8])
def test_gs_family(q):
    xi = gs_mixture(math.pi / 4, math.pi / 4, 0.0, 0.0, q)
    t = cf.gs_optimal_angle(q)
    assert upsilon_overlap(xi, t, t) == pytest.approx(cf.gs_gsf(q), abs=1e-13)
    assert generalized_singlet_fraction(xi).value == pytest.approx(cf.gs_gsf(q), abs=1e-9)
    for eps in EPSILONS:
        assert teleported_negativity(xi, (t, t), eps) == pytest.approx(
            cf.gs_negativity(q, eps), abs=1e-10
        )


def test_gs_critical_q():
    assert cf.critical_q(cf.gs_gsf, 0.5) == pytest.approx(math.sqrt(2) - 1, abs=1e-11)


def test_gs_printed_angle_is_not_a_maximizer():
    xi = gs_mixture(math.pi / 4, math.pi / 4, 0.0, 0.0, 0.5)
    t = cf.gs_printed_angle(0.5)
    assert upsilon_overlap(xi, t, t) < cf.gs_gsf(0.5) - 1e-3


@pytest.mark.parametrize("theta", ANGLES)
def test_ghz_family(theta):
    ghz = named_state("GHZ4")
    assert upsilon_overlap(ghz, theta, 0.4) == pytest.approx(cf.ghz_overlap(theta), abs=1e-14)
    for eps in EPSILONS:
        assert teleported_negativity(ghz, (theta, 0.0), eps) == pytest.approx(
            cf.ghz_negativity(theta, eps), abs=1e-10
        )


@pytest.mark.parametrize("phi", ANGLES)
def test_w_family(phi):
    w1 = named_state("W1")
    assert upsilon_overlap(w1, 0.2, phi) == pytest.approx(cf.w_overlap(0.2, phi), abs=1e-14)
    for eps in EPSILONS:
        assert teleported_negativity(w1, (math.pi / 4, phi), eps) == pytest.approx(
            cf.w_negativity(phi, eps), abs=1e-10
        )


def test_w_overlap_values():
    assert cf.w_overlap(math.pi / 4, math.pi / 4) == pytest.approx(0.5)
    assert cf.w_overlap(0.0, 0.0) == pytest.approx(0.25)


def test_smolin_state():
    smolin = named_state("Smolin")
    assert generalized_singlet_fraction(smolin).value == pytest.approx(0.25, abs=1e-9)
    assert negativity(smolin, SubsystemMask.of(4, [0])) == pytest.approx(1.0, abs=1e-10)
    for eps in EPSILONS:
        assert teleported_negativity(smolin, (0.0, 0.0), eps) == pytest.approx(
            math.sin(2 * eps), abs=1e-10
        )
    for traced in range(4):
        keep = SubsystemMask.of(4, [k for k in range(4) if k != traced])
        assert_allclose(partial_trace(smolin, keep), np.eye(8) / 8, atol=1e-14)
