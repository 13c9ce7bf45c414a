"""
Report Writers
Byte-stable CSV, JSON and plain-text summaries.

CSV files start with a version line
``# qteleport-lab v<version> rng=<algorithm> seed=<seed>`` followed by the
column header. Floats are written with 17 significant digits. JSON is sorted
and carries no timestamp, so two runs with the same seed produce identical
files.

Example usage:
    write_csv(Path("outputs/scan_iso.csv"), ["family", "q"], rows, seed=42)
    write_json(Path("outputs/reproduce.json"), report)
    write_summary(Path("outputs/reproduce_summary.txt"), report)
"""

from typing import Any, Dict, Iterable, List

import csv
import json
from pathlib import Path

from .. import __version__
from ..core.sampling import RNG_ALGORITHM


def csv_header_line(seed: int) -> str:
    return f"# qteleport-lab v{__version__} rng={RNG_ALGORITHM} seed={seed}"


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def summary_path(output_path: Path) -> Path:
    return output_path.with_name(f"{output_path.stem}_summary.txt")


def _prepare(path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)


def write_csv(
    path: Path, fieldnames: List[str], rows: Iterable[Dict[str, Any]], seed: int
) -> None:
    """Write rows with the versioned header line."""
    _prepare(path)
    with open(path, "w", newline="", encoding="utf-8") as f:
        f.write(csv_header_line(seed) + "\n")
        writer = csv.DictWriter(f, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: format_value(row.get(k)) for k in fieldnames})


def write_json(path: Path, payload: Dict[str, Any]) -> None:
    _prepare(path)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write("\n")


def write_summary(path: Path, report: Dict[str, Any]) -> None:
    """Plain-text digest of a report."""
    _prepare(path)
    config = report.get("config", {})
    summary = report.get("summary", {})
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"{config.get('command', 'run').upper()} SUMMARY\n")
        f.write("=" * 70 + "\n\n")
        f.write(f"Seed: {config.get('seed')}\n")
        f.write(f"RNG: {RNG_ALGORITHM}\n")
        f.write(f"Passed: {summary.get('passed', 0)}\n")
        f.write(f"Failed: {summary.get('failed', 0)}\n")
        f.write(f"Informational: {summary.get('informational', 0)}\n\n")

        for key, value in sorted(summary.items()):
            if key in ("passed", "failed", "informational"):
                continue
            f.write(f"{key}: {format_value(value)}\n")

        failing = [c for c in report.get("checks", []) if not c["passed"]]
        if failing:
            f.write("\nChecks not passing:\n")
            for check in failing:
                tag = " (informational)" if check["informational"] else ""
                f.write(
                    f"  {check['check_id']}{tag}: expected {format_value(check['expected'])}, "
                    f"computed {format_value(check['computed'])}, tol {check['tolerance']:g}"
                )
                if check.get("note"):
                    f.write(f" [{check['note']}]")
                f.write("\n")
