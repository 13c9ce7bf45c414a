"""
Conjecture Scan
Empirical scan of the claim that a resource with G_max <= 1/4 teleports no
entanglement.

Each sample draws a resource, computes G and G_max, teleports
cos(eps)|00> + sin(eps)|11> through E0 at the G angles for every eps on a
grid and records the largest output negativity. Resources below the
threshold that still produce negativity above the tolerance are candidate
counterexamples, except the boundary case G_max = 1/4 of the Smolin family,
which is reported separately. The Smolin state itself is always row 0.

Example usage:
    run = RunConfig(command="conjecture", sampler="ginibre", samples=1000, ...)
    evaluator = BenchmarkEvaluator(config, run)
    run_conjecture(evaluator)
    print(evaluator.extra_summary["counterexamples"])
"""

from typing import Any, Dict, List, Tuple

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..core.linalg import dagger
from ..core.sampling import RandomStream, ginibre_density
from ..metrics.entanglement import epsilon_grid, teleported_negativity
from ..metrics.fidelity import METRIC_CONTEXT
from ..metrics.optimize import (
    OptimizerSettings,
    generalized_singlet_fraction,
    max_generalized_singlet_fraction,
)
from ..states.factory import gs_mixture, named_state, upsilon_basis
from .evaluator import BenchmarkEvaluator, CheckSpec
from .records import ConjectureSample

HALF_PI = math.pi / 2

SAMPLE_FIELDS = list(ConjectureSample.model_fields)


class ConjectureSettings(BaseModel):
    """The ``conjecture`` config section."""

    model_config = ConfigDict(frozen=True)

    margin: float = Field(default=1e-9, ge=0.0)
    boundary_tol: float = Field(default=1e-9, ge=0.0)
    epsilon_points: int = Field(default=19, ge=2)
    restarts: int = Field(default=2, ge=0)
    refine_top: int = Field(default=2, ge=1)
    unitary_maxfev: int = Field(default=800, ge=1)

    @classmethod
    def from_config(cls, config: Dict[str, Any]) -> "ConjectureSettings":
        section = config.get("conjecture", {}) or {}
        return cls(**{k: v for k, v in section.items() if k in cls.model_fields})

    def epsilons(self) -> np.ndarray:
        """Uniform grid on [0, pi/2] that always contains pi/4."""
        return np.union1d(epsilon_grid(self.epsilon_points), [math.pi / 4])


def _angles(rng: np.random.Generator, count: int) -> np.ndarray:
    return rng.uniform(-HALF_PI + 0.01, HALF_PI - 0.01, size=count)


def draw_resource(sampler: str, stream: RandomStream) -> Tuple[np.ndarray, str]:
    """
    Draw one resource.

    Args:
        sampler: "ginibre" (random rank 1-16), "ups_mixture" (random convex
            combination of the sixteen Upsilon^{mu nu} at random angles) or
            "smolin_mixture" (gs_mixture with random angles and q)
        stream: Stream of this sample

    Returns:
        (density matrix, descriptor)
    """
    rng = stream.generator()
    if sampler == "ginibre":
        rank = int(rng.integers(1, 17))
        return ginibre_density(rng, 16, rank), f"ginibre(rank={rank})"
    if sampler == "ups_mixture":
        theta, phi = _angles(rng, 2)
        weights = rng.dirichlet(np.ones(16))
        basis = upsilon_basis((theta, phi))
        xi = basis @ np.diag(weights) @ dagger(basis)
        return (xi + dagger(xi)) / 2, f"ups_mixture(theta={theta:.6f}, phi={phi:.6f})"
    if sampler == "smolin_mixture":
        alpha, beta, gamma, delta = _angles(rng, 4)
        q = float(rng.uniform(0.0, 1.0))
        descriptor = (
            f"smolin_mixture(alpha={alpha:.6f}, beta={beta:.6f}, "
            f"gamma={gamma:.6f}, delta={delta:.6f}, q={q:.6f})"
        )
        return gs_mixture(alpha, beta, gamma, delta, q), descriptor
    raise ValueError(f"unknown sampler: {sampler}")


def examine_resource(
    xi: np.ndarray,
    descriptor: str,
    index: int,
    stream: RandomStream,
    settings: OptimizerSettings,
    conjecture: ConjectureSettings,
    tolerance: float,
) -> ConjectureSample:
    """G, G_max and the teleported negativity profile of one resource."""
    threshold = METRIC_CONTEXT.conjecture_threshold
    g = generalized_singlet_fraction(xi, settings)
    g_max = max_generalized_singlet_fraction(
        xi,
        restarts=conjecture.restarts,
        stream=stream.substream(1),
        settings=settings,
        stop_above=threshold + conjecture.margin,
    )

    epsilons = conjecture.epsilons()
    values = np.array(
        [teleported_negativity(xi, g.argmax_angles, float(e)) for e in epsilons]
    )
    best = int(np.argmax(values))
    entangled = [math.sin(2 * float(e)) for e, v in zip(epsilons, values) if v > tolerance]

    below = g_max.value <= threshold + conjecture.margin
    boundary = below and abs(g_max.value - threshold) <= conjecture.boundary_tol
    return ConjectureSample(
        sample_index=index,
        resource_descriptor=descriptor,
        stream_id=stream.stream_id,
        gsf=g.value,
        gsf_max=max(g_max.value, g.value),
        max_output_negativity=float(values[best]),
        epsilon_at_max=float(epsilons[best]),
        min_entangled_input=min(entangled) if entangled else None,
        below_threshold=below,
        boundary=boundary,
        counterexample=below and not boundary and float(values[best]) > tolerance,
    )


def run_conjecture(evaluator: BenchmarkEvaluator) -> None:
    run = evaluator.run
    sampler = run.sampler or "ginibre"
    conjecture = ConjectureSettings.from_config(evaluator.config)
    settings = evaluator.settings.model_copy(
        update={
            "refine_top": conjecture.refine_top,
            "unitary_maxfev": conjecture.unitary_maxfev,
        }
    )
    root = evaluator.stream
    evaluator.logger.info(f"Conjecture scan: {run.samples} {sampler} samples")

    def task(index: int) -> ConjectureSample:
        if index == 0:
            return examine_resource(
                named_state("Smolin"), "smolin(0, 0)", 0, root.substream(0),
                settings, conjecture, run.tolerance,
            )
        stream = root.substream(index)
        xi, descriptor = draw_resource(sampler, stream)
        return examine_resource(
            xi, descriptor, index, stream, settings, conjecture, run.tolerance
        )

    samples: List[ConjectureSample] = evaluator.map_tasks(task, range(run.samples + 1))
    smolin = samples[0]
    counterexamples = [s for s in samples if s.counterexample]
    for s in counterexamples:
        evaluator.logger.warning(
            f"Candidate counterexample #{s.sample_index} {s.resource_descriptor} "
            f"(seed={run.seed}, stream={s.stream_id}): N = {s.max_output_negativity:.3e}"
        )

    evaluator.rows = [s.model_dump() for s in samples]
    evaluator.fieldnames = SAMPLE_FIELDS
    evaluator.extra_summary.update(
        {
            "sampler": sampler,
            "samples": run.samples,
            "below_threshold": sum(1 for s in samples[1:] if s.below_threshold),
            "boundary": sum(1 for s in samples[1:] if s.boundary),
            "counterexamples": len(counterexamples),
            "counterexample_streams": "; ".join(
                f"#{s.sample_index} stream={s.stream_id}" for s in counterexamples
            ),
        }
    )

    evaluator.run_checks(
        [
            CheckSpec(
                "smolin_boundary_gsf",
                METRIC_CONTEXT.conjecture_threshold,
                1e-9,
                "boundary case G = 1/4",
                lambda: smolin.gsf,
            ),
            CheckSpec(
                "smolin_boundary_negativity",
                1.0,
                1e-10,
                "Smolin: N = max{0, sin 2eps}, 1 at eps = pi/4",
                lambda: smolin.max_output_negativity,
            ),
            CheckSpec(
                "smolin_boundary_tagged",
                1.0,
                0.0,
                "Smolin is the documented boundary case",
                lambda: float(smolin.boundary),
            ),
            CheckSpec(
                "counterexamples",
                0.0,
                0.5,
                "G <= 1/4 teleports no entanglement",
                lambda: float(len(counterexamples)),
                informational=True,
                note=f"tolerance {run.tolerance:g}, margin {conjecture.margin:g}",
            ),
        ]
    )
