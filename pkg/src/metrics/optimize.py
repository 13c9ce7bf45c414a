"""
Singlet Fraction Optimizers
Maximizations behind the generalized singlet fraction G, its unitary-assisted
maximum G_max and the single-qubit maximal singlet fraction F_max.

G is a maximization of a low-degree trigonometric polynomial over the open
square (-pi/2, pi/2)^2: a uniform grid brackets the maximum and Nelder-Mead
polishes the best cells. Points outside the open square evaluate to +inf for
the minimizer, so the simplex never leaves it.

The unitary searches parameterize U = exp(iH) with H expanded in Hermitian
Pauli strings and run multistart Nelder-Mead. They are heuristic and always
report certified=False.

Example usage:
    settings = OptimizerSettings.from_config(config)
    g = generalized_singlet_fraction(iso_mixture(0.3, -0.2, 0.8), settings)
    g_max = max_generalized_singlet_fraction(xi, restarts=8, stream=RandomStream(seed=3))
    print(g.value, g.argmax_angles, g_max.value, g_max.fidelity)
"""

from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

import logging
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.linalg import expm, polar, schur
from scipy.optimize import minimize

from ..core.linalg import dagger, hermitian_eigh, validate_density_matrix
from ..core.sampling import RandomStream, haar_unitary
from ..states.factory import AnglePair, upsilon_amplitudes
from ..states.operators import bell, hermitian_pauli

logger = logging.getLogger("metrics.optimize")

HALF_PI = math.pi / 2


class OptimizerSettings(BaseModel):
    """Search parameters; ``from_config`` reads the ``optimizer`` section."""

    model_config = ConfigDict(frozen=True)

    grid_points: int = Field(default=61, ge=2)
    margin: float = Field(default=0.01, gt=0.0, lt=HALF_PI)
    top_cells: int = Field(default=3, ge=1)
    xatol: float = Field(default=1e-9, gt=0.0)
    fatol: float = Field(default=1e-15, gt=0.0)
    angle_maxiter: int = Field(default=4000, ge=1)
    flat_tol: float = Field(default=1e-12, gt=0.0)
    restarts: int = Field(default=32, ge=0)
    refine_top: int = Field(default=4, ge=1)
    unitary_maxfev: int = Field(default=4000, ge=1)
    unitary_step: float = Field(default=0.25, gt=0.0)
    seed: int = Field(default=0, ge=0)

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "OptimizerSettings":
        section = dict(config.get("optimizer", {}))
        section.setdefault("seed", config.get("rng", {}).get("seed", 0))
        return cls(**{k: v for k, v in section.items() if k in cls.model_fields})


DEFAULT_SETTINGS = OptimizerSettings()


class OptResult(BaseModel):
    """Maximum found by a search, with where it was found."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: float
    argmax_angles: Optional[AnglePair] = None
    argmax_unitary: Optional[np.ndarray] = None
    certified: bool
    evaluations: int
    flat_directions: Tuple[str, ...] = ()
    fidelity: Optional[float] = None


def _inside(theta: float, phi: float) -> bool:
    return -HALF_PI < theta < HALF_PI and -HALF_PI < phi < HALF_PI


def upsilon_overlap(xi: np.ndarray, theta: float, phi: float) -> float:
    """<Upsilon^00(theta, phi)| Xi |Upsilon^00(theta, phi)> without range checks."""
    v = upsilon_amplitudes(theta, phi)
    return float(v @ np.real(xi) @ v)


# Angle search


def _angle_grid(settings: OptimizerSettings) -> np.ndarray:
    return np.linspace(-HALF_PI + settings.margin, HALF_PI - settings.margin, settings.grid_points)


def _inward_simplex(x0: np.ndarray, step: float) -> np.ndarray:
    simplex = [x0.copy()]
    for k in range(len(x0)):
        vertex = x0.copy()
        vertex[k] += -step if x0[k] > 0 else step
        simplex.append(vertex)
    return np.array(simplex)


def _flat_along(
    objective: Callable[[float, float], float],
    theta: float,
    phi: float,
    value: float,
    axis: int,
    samples: np.ndarray,
    tol: float,
) -> bool:
    for p in samples:
        moved = objective(p, phi) if axis == 0 else objective(theta, p)
        if abs(moved - value) > tol:
            return False
    return True


def generalized_singlet_fraction(
    xi: np.ndarray, settings: OptimizerSettings = DEFAULT_SETTINGS
) -> OptResult:
    """
    G[Xi] = max over (theta, phi) of <Upsilon^00(theta, phi)|Xi|Upsilon^00(theta, phi)>.

    Args:
        xi: Four-qubit density matrix
        settings: Grid and simplex parameters

    Returns:
        OptResult with argmax_angles; when the objective does not depend on an
        angle, that angle is reported as 0 and named in ``flat_directions``
    """
    xi = validate_density_matrix(xi)
    if xi.shape != (16, 16):
        raise ValueError("generalized_singlet_fraction expects a four-qubit state")
    xi_re = np.real(xi)
    evaluations = 0

    def objective(theta: float, phi: float) -> float:
        nonlocal evaluations
        evaluations += 1
        v = upsilon_amplitudes(theta, phi)
        return float(v @ xi_re @ v)

    grid = _angle_grid(settings)
    tt, pp = np.meshgrid(grid, grid, indexing="ij")
    amps = upsilon_amplitudes(tt, pp)
    surface = np.einsum("abi,ij,abj->ab", amps, xi_re, amps)
    evaluations += surface.size

    # Best cells first, ties to the smallest (theta, phi).
    order = np.lexsort((pp.ravel(), tt.ravel(), -surface.ravel()))
    spacing = grid[1] - grid[0]

    candidates: List[Tuple[float, float, float]] = []
    for rank, flat in enumerate(order[: settings.top_cells]):
        x0 = np.array([tt.ravel()[flat], pp.ravel()[flat]])

        def negative(x: np.ndarray) -> float:
            if not _inside(x[0], x[1]):
                return math.inf
            return -objective(x[0], x[1])

        res = minimize(
            negative,
            x0,
            method="Nelder-Mead",
            options={
                "initial_simplex": _inward_simplex(x0, spacing / 2),
                "xatol": settings.xatol,
                "fatol": settings.fatol,
                "maxiter": settings.angle_maxiter,
            },
        )
        theta, phi = float(res.x[0]), float(res.x[1])
        candidates.append((-float(res.fun), theta, phi))
        logger.debug(f"Angle refinement {rank}: value={-res.fun:.15f} at ({theta:.9f}, {phi:.9f})")

    best = max(c[0] for c in candidates)
    ties = [c for c in candidates if c[0] >= best - settings.flat_tol]
    _, theta, phi = min(ties, key=lambda c: (c[1], c[2]))

    samples = grid[:: max(1, len(grid) // 8)]
    flat: List[str] = []
    value = objective(theta, phi)
    if _flat_along(objective, theta, phi, value, 1, samples, settings.flat_tol):
        phi = 0.0
        flat.append("phi")
    if _flat_along(objective, theta, phi, value, 0, samples, settings.flat_tol):
        theta = 0.0
        flat.append("theta")

    value = objective(theta, phi)
    return OptResult(
        value=value,
        argmax_angles=AnglePair(theta=theta, phi=phi),
        certified=True,
        evaluations=evaluations,
        flat_directions=tuple(flat),
        fidelity=0.2 + 0.8 * value,
    )


# Unitary search


def hermitian_basis(n_qubits: int) -> np.ndarray:
    """All 4**n Hermitian Pauli strings, flat index in base 4."""
    basis = [np.eye(1, dtype=complex)]
    for _ in range(n_qubits):
        basis = [np.kron(b, hermitian_pauli(mu)) for b in basis for mu in range(4)]
    return np.array(basis)


def unitary_from_params(h: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """exp(i sum_k h_k P_k)."""
    return expm(1j * np.tensordot(h, basis, axes=1))


def params_from_unitary(u: np.ndarray, basis: np.ndarray) -> np.ndarray:
    """Pauli coefficients of a Hermitian logarithm H with exp(iH) = u."""
    t, z = schur(u, output="complex")
    phases = np.angle(np.diag(t))
    h = z @ np.diag(phases) @ dagger(z)
    return np.real(np.einsum("kij,ji->k", basis, h)) / u.shape[0]


def _pauli_starts(basis: np.ndarray) -> List[np.ndarray]:
    """Parameters with exp(iH) equal to each Pauli string."""
    starts = []
    for k in range(len(basis)):
        h = np.zeros(len(basis))
        if k:
            h[0] = HALF_PI
            h[k] = -HALF_PI
        starts.append(h)
    return starts


class _Candidate(NamedTuple):
    value: float
    x: np.ndarray
    label: str
    index: int


def _multistart(
    objective: Callable[[np.ndarray], float],
    candidates: List[_Candidate],
    random_labels: Tuple[str, ...],
    settings: OptimizerSettings,
    stop_above: Optional[float],
) -> _Candidate:
    """Polish the best candidates and every random start; keep the overall best."""
    ranked = sorted(candidates, key=lambda c: (-c.value, c.index))
    chosen = ranked[: settings.refine_top]
    taken = {c.index for c in chosen}
    chosen += [c for c in candidates if c.label in random_labels and c.index not in taken]

    best = ranked[0]
    for cand in chosen:
        if stop_above is not None and best.value >= stop_above:
            break
        res = minimize(
            lambda x: -objective(x),
            cand.x,
            method="Nelder-Mead",
            options={
                "initial_simplex": _inward_simplex(cand.x, settings.unitary_step),
                "maxfev": settings.unitary_maxfev,
                "xatol": 1e-10,
                "fatol": 1e-14,
                "adaptive": True,
            },
        )
        value = -float(res.fun)
        logger.debug(f"Restart {cand.label}#{cand.index}: {cand.value:.12f} -> {value:.12f}")
        if value > best.value or (value == best.value and cand.index < best.index):
            best = _Candidate(value=value, x=np.array(res.x), label=cand.label, index=cand.index)
    return best


def max_generalized_singlet_fraction(
    xi: np.ndarray,
    restarts: Optional[int] = None,
    stream: Optional[RandomStream] = None,
    settings: OptimizerSettings = DEFAULT_SETTINGS,
    stop_above: Optional[float] = None,
) -> OptResult:
    """
    G_max[Xi]: joint maximum over angles and a two-qubit unitary U on B1 B2 of
    <v|Xi|v> with |v> = (I (x) U)|Upsilon^00(theta, phi)>.

    Args:
        xi: Four-qubit density matrix
        restarts: Number of random starts (settings.restarts by default)
        stream: Random stream for the random starts
        settings: Search parameters
        stop_above: Skip further polishing once this value is reached

    Returns:
        OptResult with argmax_angles, argmax_unitary, fidelity = 1/5 + 4/5 G_max;
        certified is always False
    """
    xi = validate_density_matrix(xi)
    if xi.shape != (16, 16):
        raise ValueError("max_generalized_singlet_fraction expects a four-qubit state")
    restarts = settings.restarts if restarts is None else restarts
    stream = RandomStream(seed=settings.seed) if stream is None else stream
    basis = hermitian_basis(2)
    evaluations = 0

    def objective(x: np.ndarray) -> float:
        nonlocal evaluations
        if not _inside(x[0], x[1]):
            return -math.inf
        evaluations += 1
        v = np.kron(np.eye(4), unitary_from_params(x[2:], basis)) @ upsilon_amplitudes(x[0], x[1])
        return float(np.real(np.vdot(v, xi @ v)))

    angle_opt = generalized_singlet_fraction(xi, settings)
    evaluations += angle_opt.evaluations
    angles = np.array(angle_opt.argmax_angles.as_tuple())

    starts: List[Tuple[str, np.ndarray]] = [
        ("pauli", np.concatenate([angles, h])) for h in _pauli_starts(basis)
    ]

    # Polar start: best U for the dominant eigenvector at the G angles.
    _, vectors = hermitian_eigh(xi)
    lead = vectors[:, -1].reshape(4, 4)
    m_theta = upsilon_amplitudes(angles[0], angles[1]).reshape(4, 4)
    q, _ = polar(m_theta.T @ lead)
    starts.append(("polar", np.concatenate([angles, params_from_unitary(q.T, basis)])))

    rng = stream.generator()
    low, high = -HALF_PI + settings.margin, HALF_PI - settings.margin
    for _ in range(restarts):
        u = haar_unitary(rng, 4)
        start_angles = rng.uniform(low, high, size=2)
        starts.append(("random", np.concatenate([start_angles, params_from_unitary(u, basis)])))

    candidates = [
        _Candidate(value=objective(x), x=x, label=label, index=i)
        for i, (label, x) in enumerate(starts)
    ]
    best = _multistart(objective, candidates, ("random",), settings, stop_above)

    unitary = unitary_from_params(best.x[2:], basis)
    value = objective(best.x)
    logger.debug(f"G_max {value:.12f} (G {angle_opt.value:.12f}) after {evaluations} evaluations")
    return OptResult(
        value=value,
        argmax_angles=AnglePair(theta=float(best.x[0]), phi=float(best.x[1])),
        argmax_unitary=unitary,
        certified=False,
        evaluations=evaluations,
        fidelity=0.2 + 0.8 * value,
    )


def max_singlet_fraction(
    chi: np.ndarray,
    restarts: Optional[int] = None,
    stream: Optional[RandomStream] = None,
    settings: OptimizerSettings = DEFAULT_SETTINGS,
    stop_above: Optional[float] = None,
) -> OptResult:
    """
    F_max[chi] = max over single-qubit u of <Psi^0|(I (x) u) chi (I (x) u^dagger)|Psi^0>.

    Returns:
        OptResult with argmax_unitary = u and fidelity = 1/3 + 2/3 F_max;
        certified is always False
    """
    chi = validate_density_matrix(chi)
    if chi.shape != (4, 4):
        raise ValueError("max_singlet_fraction expects a two-qubit state")
    restarts = settings.restarts if restarts is None else restarts
    stream = RandomStream(seed=settings.seed) if stream is None else stream
    basis = hermitian_basis(1)
    phi0 = bell(0)
    evaluations = 0

    def objective(h: np.ndarray) -> float:
        nonlocal evaluations
        evaluations += 1
        u = unitary_from_params(h, basis)
        w = np.kron(np.eye(2), dagger(u)) @ phi0
        return float(np.real(np.vdot(w, chi @ w)))

    starts: List[Tuple[str, np.ndarray]] = [("pauli", h) for h in _pauli_starts(basis)]

    _, vectors = hermitian_eigh(chi)
    lead = vectors[:, -1].reshape(2, 2)
    q, _ = polar(lead.T)
    starts.append(("polar", params_from_unitary(dagger(q), basis)))

    rng = stream.generator()
    for _ in range(restarts):
        starts.append(("random", params_from_unitary(haar_unitary(rng, 2), basis)))

    candidates = [
        _Candidate(value=objective(x), x=x, label=label, index=i)
        for i, (label, x) in enumerate(starts)
    ]
    best = _multistart(objective, candidates, ("random",), settings, stop_above)

    value = objective(best.x)
    return OptResult(
        value=value,
        argmax_unitary=unitary_from_params(best.x, basis),
        certified=False,
        evaluations=evaluations,
        fidelity=1.0 / 3.0 + 2.0 * value / 3.0,
    )
