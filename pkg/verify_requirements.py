"""
Quick Verification Script
Checks that the environment and the repository are ready before a run.

Usage: python verify_requirements.py
"""

import importlib
import json
import sys
from pathlib import Path
from typing import Dict, List

import yaml

REQUIRED_PACKAGES = ["numpy", "scipy", "yaml", "dotenv", "pydantic", "pytest"]

REQUIRED_MODULES = [
    "src.core.linalg",
    "src.core.sampling",
    "src.states.factory",
    "src.channels.teleport",
    "src.channels.protocol",
    "src.metrics.fidelity",
    "src.metrics.optimize",
    "src.metrics.entanglement",
    "src.evaluation.evaluator",
    "src.ui.cli",
]

REQUIRED_CONFIG_SECTIONS = [
    "system",
    "rng",
    "optimizer",
    "runs",
    "conjecture",
    "scan",
    "outputs",
    "logging",
]

SCAN_FAMILIES = ["iso", "gs", "ghz", "w"]


def print_header(title):
    """Print section header."""
    print("\n" + "=" * 80)
    print(f"  {title}")
    print("=" * 80)


def check_file_exists(filepath, description):
    """Check if a file exists."""
    exists = Path(filepath).exists()
    status = "OK  " if exists else "FAIL"
    print(f"{status} {description}: {filepath}")
    return exists


def check_import(module_path, description):
    """Check if a module can be imported."""
    try:
        importlib.import_module(module_path)
        print(f"OK   {description}: {module_path}")
        return True
    except Exception as e:
        print(f"FAIL {description}: {module_path} - Error: {str(e)}")
        return False


def missing_config_sections(config: Dict) -> List[str]:
    return [s for s in REQUIRED_CONFIG_SECTIONS if s not in config]


def missing_scan_families(grids: Dict) -> List[str]:
    families = grids.get("families", {})
    return [f for f in SCAN_FAMILIES if f not in families or "range" not in families[f]]


def main():
    """Run all verification checks."""
    print_header("qteleport-lab environment verification")

    all_passed = True

    print_header("1. Packages")
    for package in REQUIRED_PACKAGES:
        all_passed &= check_import(package, "Package")

    print_header("2. Library modules")
    for module in REQUIRED_MODULES:
        all_passed &= check_import(module, "Module")

    print_header("3. Configuration")
    if check_file_exists("config.yaml", "Config file"):
        with open("config.yaml", "r") as f:
            config = yaml.safe_load(f) or {}
        missing = missing_config_sections(config)
        if missing:
            print(f"FAIL Missing config sections: {missing}")
            all_passed = False
        else:
            print("OK   All config sections present")
    else:
        all_passed = False

    print_header("4. Scan grids")
    if check_file_exists("data/scan_grids.json", "Scan grids"):
        with open("data/scan_grids.json", "r") as f:
            grids = json.load(f)
        missing = missing_scan_families(grids)
        if missing:
            print(f"FAIL Families without a range: {missing}")
            all_passed = False
        else:
            print(f"OK   Families: {', '.join(SCAN_FAMILIES)}")
    else:
        all_passed = False

    print_header("Result")
    print("All checks passed." if all_passed else "Some checks failed.")
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
