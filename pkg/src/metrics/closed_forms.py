"""
Closed Forms
Analytic overlap, negativity, fidelity and filter expressions for the example
resource families, and bisection for their critical mixing parameters.

Angles are (theta, phi) = (theta_12, phi_12). ``*_printed`` variants keep the
commonly quoted max{0, .} shapes; the unprefixed ones are exact for all
angles.

Example usage:
    q_crit = critical_q(iso_gsf, 0.5)        # 7/15
    print(gs_gsf(0.6), gs_negativity(0.6, math.pi / 4))
"""

from typing import Callable

import math

import numpy as np
from scipy.optimize import bisect

BISECTION_XTOL = 1e-12


def filter_f1(theta: float, phi: float) -> float:
    c2t, c2p = math.cos(2 * theta), math.cos(2 * phi)
    s2t, s2p = math.sin(2 * theta), math.sin(2 * phi)
    return 0.5 * (c2t * s2p**2 + c2p * s2t**2)


def filter_f2(theta: float, phi: float) -> float:
    c2t, c2p = math.cos(2 * theta), math.cos(2 * phi)
    s2t, s2p = math.sin(2 * theta), math.sin(2 * phi)
    return 0.5 * s2t**2 * s2p**2 + 0.25 * (1 - c2t * c2p) * (s2t**2 + s2p**2)


def filter_f3(theta: float, phi: float) -> float:
    """
    Sixth-order filter on Upsilon^00 from the three pair norms.

    The alpha, beta and gamma norms evaluate to -[2(s2t^2 + s2p^2) - (c2t - c2p)^2]/4,
    -(1 - c2t c2p) and 2 + c2t c2p, and F3 is half their product.
    """
    c2t, c2p = math.cos(2 * theta), math.cos(2 * phi)
    s2t, s2p = math.sin(2 * theta), math.sin(2 * phi)
    return (
        (1 - c2t * c2p)
        * (2 + c2t * c2p)
        * (2 * (s2t**2 + s2p**2) - (c2t - c2p) ** 2)
        / 8
    )


def filter_f3_printed(theta: float, phi: float) -> float:
    """Commonly quoted F3 shape with (1 - 2 c2t c2p); vanishes at theta = phi = pi/8."""
    c2t, c2p = math.cos(2 * theta), math.cos(2 * phi)
    s2t, s2p = math.sin(2 * theta), math.sin(2 * phi)
    return (
        (1 - 2 * c2t * c2p)
        * (2 + c2t * c2p)
        * (2 * (s2t**2 + s2p**2) - (c2t - c2p) ** 2)
        / 8
    )


def iso_overlap(theta: float, phi: float, alpha: float, beta: float, q: float) -> float:
    """<Upsilon^00(theta, phi)| iso_mixture(alpha, beta, q) |Upsilon^00(theta, phi)>."""
    return (1 - q) / 16 + q / 4 * (math.cos(theta - alpha) + math.cos(phi - beta)) ** 2


def iso_gsf(q: float) -> float:
    return (1 + 15 * q) / 16


def iso_negativity(q: float, epsilon: float) -> float:
    """Teleported negativity through the isotropic mixture at matched angles."""
    return max(0.0, q * math.sin(2 * epsilon) - (1 - q) / 2)


def iso_vanishing_q(epsilon: float) -> float:
    """Largest q for which iso_negativity(q, epsilon) is zero."""
    return 1.0 / (1.0 + 2.0 * math.sin(2 * epsilon))


def gs_overlap(
    theta: float,
    phi: float,
    alpha: float,
    beta: float,
    gamma: float,
    delta: float,
    q: float,
) -> float:
    """<Upsilon^00(theta, phi)| gs_mixture(alpha, beta, gamma, delta, q) |Upsilon^00(theta, phi)>."""
    pure = q / 4 * (math.cos(theta - alpha) + math.cos(phi - beta)) ** 2
    smolin = (1 - q) / 8 * (math.cos(theta - gamma) ** 2 + math.cos(phi - delta) ** 2)
    return pure + smolin


def _gs_root(q: float) -> float:
    return math.sqrt(17 * q**2 - 2 * q + 1)


def gs_optimal_angle(q: float) -> float:
    """theta_12 = phi_12 maximizing gs_overlap for alpha = beta = pi/4, gamma = delta = 0."""
    return 0.5 * math.acos((1 - q) / _gs_root(q))


def gs_printed_angle(q: float) -> float:
    """The same expression without the factor 1/2; not a maximizer for 0 < q < 1."""
    return math.acos((1 - q) / _gs_root(q))


def gs_gsf(q: float) -> float:
    return (1 + 3 * q + _gs_root(q)) / 8


def gs_negativity(q: float, epsilon: float) -> float:
    """Teleported negativity through the gs mixture at gs_optimal_angle(q)."""
    return (5 * q**2 - 2 * q + 1) / _gs_root(q) * math.sin(2 * epsilon)


def ghz_overlap(theta: float) -> float:
    return 0.5 * math.cos(theta) ** 2


def ghz_negativity(theta: float, epsilon: float) -> float:
    return abs(math.cos(2 * theta)) * math.sin(2 * epsilon)


def ghz_negativity_printed(theta: float, epsilon: float) -> float:
    return max(0.0, math.cos(2 * theta) * math.sin(2 * epsilon))


def w_overlap(theta: float, phi: float) -> float:
    """<Upsilon^00| W1 |Upsilon^00>."""
    return (
        2
        + math.sin(2 * theta)
        + 2 * math.sin(theta + phi)
        + 2 * math.cos(theta - phi)
        + math.sin(2 * phi)
    ) / 16


def w_negativity(phi: float, epsilon: float) -> float:
    return abs(0.5 * math.sin(2 * phi)) * math.sin(2 * epsilon)


def w_negativity_printed(phi: float, epsilon: float) -> float:
    return max(0.0, 0.5 * math.sin(2 * phi) * math.sin(2 * epsilon))


def smolin_fidelity(epsilon: float) -> float:
    """<Psi|E0(Psi)|Psi> for the Smolin resource at zero angles."""
    return (1 + math.sin(2 * epsilon) ** 2) / 2


def pair_fidelity_from_overlap(overlap: float) -> float:
    return 0.2 + 0.8 * overlap


def single_fidelity_from_overlap(overlap: float) -> float:
    return 1.0 / 3.0 + 2.0 * overlap / 3.0


def critical_q(
    func: Callable[[float], float],
    target: float,
    lo: float = 0.0,
    hi: float = 1.0,
) -> float:
    """
    Bisection root of func(q) = target on [lo, hi].

    Raises:
        ValueError: if func - target does not change sign on the bracket
    """
    f_lo, f_hi = func(lo) - target, func(hi) - target
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise ValueError(f"no sign change of f - {target} on [{lo}, {hi}]")
    return float(bisect(lambda q: func(q) - target, lo, hi, xtol=BISECTION_XTOL))
