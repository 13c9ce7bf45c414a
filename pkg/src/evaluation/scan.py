"""
Family Scans
Sweeps one example resource family over its parameter and compares the
teleported negativity with the closed form at every grid point.

Families and their swept parameter:
    iso  q in [0, 1], measured at the mixture's own angles
    gs   q in [0, 1], measured at the optimal angle for that q
    ghz  theta_12 of the measurement, resource GHZ4
    w    phi_12 of the measurement, resource W1

Default ranges, fixed angles and the epsilon grid live in
data/scan_grids.json; the ``scan`` config section may override them.

Example usage:
    run = RunConfig(command="scan", family="iso", grid_points=6, epsilon=math.pi / 4, ...)
    evaluator = BenchmarkEvaluator(config, run)
    run_scan(evaluator)
    for row in evaluator.rows:
        print(row["parameter_value"], row["negativity"])
"""

from typing import Any, Dict, List, Tuple

import json
import math
from pathlib import Path

import numpy as np

from ..metrics import closed_forms as cf
from ..metrics.entanglement import teleported_negativity
from ..metrics.optimize import OptimizerSettings, generalized_singlet_fraction, upsilon_overlap
from ..states.factory import gs_mixture, iso_mixture, named_state
from .evaluator import BenchmarkEvaluator, CheckSpec

DEFAULT_GRIDS_PATH = "data/scan_grids.json"

SCAN_FIELDS = [
    "family",
    "parameter_value",
    "epsilon",
    "gsf",
    "fidelity",
    "negativity",
    "analytic_negativity",
    "residual",
    # extras after the standard columns
    "parameter",
    "theta",
    "phi",
    "overlap",
    "vanishing_threshold",
    "analytic_form_exact",
]


def load_scan_grids(config: Dict[str, Any]) -> Dict[str, Any]:
    """Scan defaults from the grids file, overlaid with the ``scan`` config section."""
    scan_config = config.get("scan", {}) or {}
    path = Path(scan_config.get("grids_path", DEFAULT_GRIDS_PATH))
    if not path.exists():
        raise FileNotFoundError(f"scan grids file not found: {path}")
    with open(path, "r") as f:
        grids = json.load(f)

    for family, overrides in (scan_config.get("families", {}) or {}).items():
        grids["families"].setdefault(family, {}).update(overrides or {})
    if "epsilons" in scan_config:
        grids["epsilons"] = scan_config["epsilons"]
    return grids


def _check_range(family: str, low: float, high: float) -> None:
    if low > high:
        raise ValueError(f"{family}: empty range [{low}, {high}]")
    if family in ("iso", "gs"):
        if low < 0.0 or high > 1.0:
            raise ValueError(f"{family}: q range must lie in [0, 1]")
    elif low <= -math.pi / 2 or high >= math.pi / 2:
        raise ValueError(f"{family}: angle range must lie in the open interval (-pi/2, pi/2)")


def _check_epsilons(epsilons: List[float]) -> None:
    if not epsilons:
        raise ValueError("no epsilon values to scan")
    for eps in epsilons:
        if not 0.0 <= eps <= math.pi / 2:
            raise ValueError("epsilon must lie in [0, pi/2]")


class _FamilyPoint:
    """Resource, measurement angles and closed forms of one grid point."""

    def __init__(self, family: str, params: Dict[str, Any], value: float):
        self.family = family
        self.value = value
        self.analytic_exact = True

        if family == "iso":
            alpha, beta = params["alpha"], params["beta"]
            self.resource = iso_mixture(alpha, beta, value)
            self.angles: Tuple[float, float] = (alpha, beta)
        elif family == "gs":
            t = cf.gs_optimal_angle(value)
            self.resource = gs_mixture(
                params["alpha"], params["beta"], params["gamma"], params["delta"], value
            )
            self.angles = (t, t)
        elif family == "ghz":
            self.resource = named_state("GHZ4")
            self.angles = (value, params["phi"])
            self.analytic_exact = abs(value) <= math.pi / 4 + 1e-12
        elif family == "w":
            self.resource = named_state("W1")
            self.angles = (params["theta"], value)
            self.analytic_exact = value >= 0.0
        else:
            raise ValueError(f"unknown family: {family}")

    def analytic_negativity(self, epsilon: float) -> float:
        if self.family == "iso":
            return cf.iso_negativity(self.value, epsilon)
        if self.family == "gs":
            return cf.gs_negativity(self.value, epsilon)
        if self.family == "ghz":
            return cf.ghz_negativity_printed(self.value, epsilon)
        return cf.w_negativity_printed(self.value, epsilon)

    def rows(self, epsilons: List[float], settings: OptimizerSettings) -> List[Dict[str, Any]]:
        gsf = generalized_singlet_fraction(self.resource, settings).value
        overlap = upsilon_overlap(self.resource, *self.angles)
        rows = []
        for eps in epsilons:
            computed = teleported_negativity(self.resource, self.angles, eps)
            analytic = self.analytic_negativity(eps)
            rows.append(
                {
                    "family": self.family,
                    "parameter_value": self.value,
                    "theta": float(self.angles[0]),
                    "phi": float(self.angles[1]),
                    "epsilon": eps,
                    "overlap": overlap,
                    "gsf": gsf,
                    "fidelity": cf.pair_fidelity_from_overlap(overlap),
                    "negativity": computed,
                    "analytic_negativity": analytic,
                    "residual": abs(computed - analytic),
                    "vanishing_threshold": (
                        cf.iso_vanishing_q(eps) if self.family == "iso" else None
                    ),
                    "analytic_form_exact": self.analytic_exact,
                }
            )
        return rows


def scan_family(evaluator: BenchmarkEvaluator) -> List[Dict[str, Any]]:
    """
    Compute the rows of one family scan.

    Raises:
        ValueError: for an unknown family, an invalid range or epsilon
    """
    run = evaluator.run
    family = run.family
    if family is None:
        raise ValueError("scan needs --family")

    grids = load_scan_grids(evaluator.config)
    params = grids["families"][family]
    low, high = (float(x) for x in params["range"])
    _check_range(family, low, high)

    epsilons = [run.epsilon] if run.epsilon is not None else [float(e) for e in grids["epsilons"]]
    _check_epsilons(epsilons)

    values = [float(v) for v in np.linspace(low, high, run.grid_points)]
    points = [_FamilyPoint(family, params, v) for v in values]
    evaluator.logger.info(
        f"Scanning {family} over {params['parameter']} in [{low}, {high}] "
        f"({len(values)} points x {len(epsilons)} epsilons)"
    )

    batches = evaluator.map_tasks(lambda p: p.rows(epsilons, evaluator.settings), points)
    rows = []
    for batch in batches:
        for row in batch:
            row["parameter"] = params["parameter"]
            rows.append(row)
    return rows


def run_scan(evaluator: BenchmarkEvaluator) -> None:
    rows = scan_family(evaluator)
    evaluator.rows = rows
    evaluator.fieldnames = SCAN_FIELDS

    family = evaluator.run.family
    tol = evaluator.run.tolerance
    exact = [r["residual"] for r in rows if r["analytic_form_exact"]]
    outside = [r["residual"] for r in rows if not r["analytic_form_exact"]]

    specs = [
        CheckSpec(
            f"scan_{family}_residual",
            0.0,
            tol,
            f"{family} teleported negativity closed form",
            lambda: max(exact, default=0.0),
            note=f"{len(exact)} grid points",
        )
    ]
    if outside:
        specs.append(
            CheckSpec(
                f"scan_{family}_residual_outside_range",
                0.0,
                tol,
                f"{family} teleported negativity closed form",
                lambda: max(outside),
                informational=True,
                note="quoted max{0, .} form outside its range of validity",
            )
        )
    evaluator.run_checks(specs)
    evaluator.extra_summary["rows"] = len(rows)
