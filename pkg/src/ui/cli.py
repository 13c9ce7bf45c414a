"""
Command Line Interface
Runs the reproduction suite, family scans, the oracle check and the
conjecture scan.

Usage:
    python -m src.ui.cli reproduce --seed 42
    python -m src.ui.cli scan --family iso --grid 6 --epsilon 0.7853981633974483 --format csv
    python -m src.ui.cli oracle-check --samples 50 --tol 1e-10
    python -m src.ui.cli conjecture --sampler ginibre --samples 1000

Exit status is 0 when every graded check passes, 1 when a numerical check
fails and 2 for usage, configuration or I/O errors.
"""

import sys
from pathlib import Path

# Add project root to Python path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

import argparse
import logging
import os
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv
from pydantic import ValidationError

from src.evaluation.evaluator import BenchmarkEvaluator
from src.evaluation.records import RunConfig

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

COMMANDS = ["reproduce", "scan", "oracle-check", "conjecture"]

ENV_SEED = "QTELEPORT_SEED"
ENV_WORKERS = "QTELEPORT_WORKERS"
ENV_LOG_LEVEL = "QTELEPORT_LOG_LEVEL"


class CLI:
    """
    Command-line front end.

    Values are merged in the order config.yaml < environment < flags and
    validated into a RunConfig before anything is computed.
    """

    def __init__(self, config_path: str = "config.yaml"):
        """
        Load configuration and set up logging.

        Args:
            config_path: Path to configuration file
        """
        with open(config_path, "r") as f:
            self.config: Dict[str, Any] = yaml.safe_load(f) or {}

        level = os.getenv(ENV_LOG_LEVEL)
        if level:
            self.config.setdefault("logging", {})["level"] = level.upper()

        self._setup_logging()
        self.logger = logging.getLogger("cli")

    def _setup_logging(self):
        """Setup logging configuration."""
        log_config = self.config.get("logging", {})
        log_level = log_config.get("level", "INFO")
        log_format = log_config.get(
            "format",
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
        )

        handlers: List[logging.Handler] = [logging.StreamHandler()]
        log_file = log_config.get("file")
        if log_file:
            Path(log_file).parent.mkdir(parents=True, exist_ok=True)
            handlers.append(logging.FileHandler(log_file))

        logging.basicConfig(
            level=getattr(logging, log_level),
            format=log_format,
            handlers=handlers,
            force=True,
        )

    def build_run_config(self, args: argparse.Namespace) -> RunConfig:
        """
        Merge config, environment and flags for one command.

        Raises:
            pydantic.ValidationError: if a merged value is out of range
        """
        command = args.command
        defaults = self.config.get("runs", {}).get(command.replace("-", "_"), {}) or {}

        seed = self.config.get("rng", {}).get("seed", 0)
        if os.getenv(ENV_SEED):
            seed = int(os.environ[ENV_SEED])
        if args.seed is not None:
            seed = args.seed

        workers = self.config.get("workers", 1)
        if os.getenv(ENV_WORKERS):
            workers = int(os.environ[ENV_WORKERS])
        if args.workers is not None:
            workers = args.workers

        outputs = self.config.get("outputs", {})
        fmt = args.format or outputs.get("format", "json")
        family = getattr(args, "family", None)
        sampler = getattr(args, "sampler", None)
        output_path = args.out or self._default_output(command, fmt, family or sampler)

        return RunConfig(
            command=command,
            seed=seed,
            samples=args.samples if args.samples is not None else defaults.get("samples", 1),
            grid_points=args.grid if args.grid is not None else defaults.get("grid_points", 2),
            tolerance=args.tol if args.tol is not None else defaults.get("tolerance", 1e-10),
            output_path=output_path,
            format=fmt,
            workers=workers,
            family=family,
            sampler=sampler,
            epsilon=getattr(args, "epsilon", None),
        )

    def _default_output(self, command: str, fmt: str, variant: Optional[str]) -> str:
        directory = self.config.get("outputs", {}).get("directory", "outputs")
        stem = command.replace("-", "_")
        if variant:
            stem += f"_{variant}"
        return str(Path(directory) / f"{stem}.{fmt}")

    def run(self, args: argparse.Namespace) -> int:
        """Execute one command and return the process exit status."""
        run = self.build_run_config(args)
        self._print_header(run)

        evaluator = BenchmarkEvaluator(self.config, run)
        report = evaluator.evaluate()
        self._print_report(report, run)
        return evaluator.exit_status()

    def _print_header(self, run: RunConfig):
        """Print run banner."""
        system = self.config.get("system", {})
        print("=" * 70)
        print(f"  {system.get('name', 'qteleport-lab')} v{system.get('version', '')}")
        print(f"  Command: {run.command}  Seed: {run.seed}  Workers: {run.workers}")
        print("=" * 70)

    def _print_report(self, report: Dict[str, Any], run: RunConfig):
        """Print summary and every non-passing check."""
        summary = report["summary"]
        print(f"\nPassed: {summary['passed']}")
        print(f"Failed: {summary['failed']}")
        print(f"Informational: {summary['informational']}")

        for key in ("rows", "samples", "below_threshold", "boundary", "counterexamples"):
            if key in summary:
                print(f"{key.replace('_', ' ').capitalize()}: {summary[key]}")

        not_passing = [c for c in report["checks"] if not c["passed"]]
        if not_passing:
            print("\n" + "-" * 70)
            print("CHECKS NOT PASSING")
            print("-" * 70)
            for check in not_passing:
                tag = "info" if check["informational"] else "FAIL"
                print(f"  [{tag}] {check['check_id']}: expected {check['expected']!r}, "
                      f"computed {check['computed']!r}")
                if check["note"]:
                    print(f"         {check['note']}")

        print("\n" + "=" * 70)
        print(f"Report: {run.output_path}")
        print("=" * 70 + "\n")


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--config", default="config.yaml", help="Path to configuration file")
    shared.add_argument("--seed", type=int, help="Root seed (unsigned 64-bit)")
    shared.add_argument("--samples", type=int, help="Number of samples")
    shared.add_argument("--grid", type=int, help="Number of grid points")
    shared.add_argument("--tol", type=float, help="Tolerance")
    shared.add_argument("--out", help="Report path")
    shared.add_argument("--format", choices=["csv", "json"], help="Report format")
    shared.add_argument("--workers", type=int, help="Worker threads")

    parser = argparse.ArgumentParser(
        prog="qteleport-lab",
        description="Two-qubit teleportation with four-qubit mixed resources",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("reproduce", parents=[shared], help="Run the fixed check list")

    scan = sub.add_parser("scan", parents=[shared], help="Sweep an example family")
    scan.add_argument("--family", choices=["iso", "gs", "ghz", "w"], required=True)
    scan.add_argument("--epsilon", type=float, help="Single input angle instead of the grid")

    sub.add_parser("oracle-check", parents=[shared], help="Protocol oracle vs channel formulas")

    conjecture = sub.add_parser("conjecture", parents=[shared], help="Scan resources with G_max <= 1/4")
    conjecture.add_argument(
        "--sampler", choices=["ginibre", "ups_mixture", "smolin_mixture"], default="ginibre"
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for CLI."""
    load_dotenv()
    args = build_parser().parse_args(argv)

    try:
        cli = CLI(config_path=args.config)
        return cli.run(args)
    except (ValidationError, ValueError, OSError, yaml.YAMLError) as e:
        print(f"\nError: {e}", file=sys.stderr)
        logging.getLogger("cli").error(f"{args.command} aborted: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
