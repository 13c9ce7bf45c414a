"""Shared fixtures for the qteleport-lab test suite."""

import copy
import sys
from pathlib import Path

import numpy as np
import pytest
import yaml

PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.core.sampling import RandomStream, ginibre_density, haar_unitary  # noqa: E402
from src.metrics.optimize import OptimizerSettings  # noqa: E402

SAMPLE_ANGLES = [(0.0, 0.0), (0.3, -0.7), (-1.2, 0.5), (0.9, 0.9), (-0.4, 1.4)]


@pytest.fixture(autouse=True)
def _run_from_project_root(monkeypatch):
    monkeypatch.chdir(PROJECT_ROOT)


@pytest.fixture
def stream():
    return RandomStream(seed=20240611)


@pytest.fixture
def rng(stream):
    return stream.generator()


@pytest.fixture
def random_resource(rng):
    return ginibre_density(rng, 16, 16)


@pytest.fixture
def random_recovery(rng):
    return np.stack([haar_unitary(rng, 4) for _ in range(16)])


@pytest.fixture
def fast_settings():
    return OptimizerSettings(restarts=4, refine_top=2, unitary_maxfev=1500)


@pytest.fixture
def config(tmp_path):
    """Repository config with small run sizes and outputs under tmp_path."""
    with open(PROJECT_ROOT / "config.yaml") as f:
        cfg = yaml.safe_load(f)
    cfg = copy.deepcopy(cfg)
    cfg["outputs"]["directory"] = str(tmp_path)
    cfg["logging"]["file"] = ""
    cfg["optimizer"].update({"restarts": 4, "refine_top": 2, "unitary_maxfev": 1500})
    cfg["runs"]["reproduce"].update(
        {"samples": 4000, "fidelity_resources": 2, "rotated_cases": 2, "bound_cases": 1}
    )
    cfg["runs"]["oracle_check"].update({"samples": 4, "two_design_pairs": 2, "two_design_samples": 2000})
    cfg["conjecture"].update({"epsilon_points": 7, "unitary_maxfev": 300})
    return cfg
