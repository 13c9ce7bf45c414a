"""
Benchmark Evaluator
Runs check lists, scans and the conjecture scan, and writes their reports.

Example usage:
    # Load config
    with open("config.yaml") as f:
        config = yaml.safe_load(f)

    run = RunConfig(command="reproduce", seed=42, samples=100_000,
                    grid_points=9, tolerance=1e-10,
                    output_path="outputs/reproduce.json")
    evaluator = BenchmarkEvaluator(config, run)
    report = evaluator.evaluate()

    # Results are saved to run.output_path plus a *_summary.txt next to it
"""

from typing import Any, Callable, Dict, Iterable, List, NamedTuple, Optional, TypeVar

import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from ..core.sampling import RandomStream
from ..metrics.optimize import OptimizerSettings
from .records import CheckResult, RunConfig
from .reporting import summary_path, write_csv, write_json, write_summary

T = TypeVar("T")
R = TypeVar("R")

CHECK_FIELDS = [
    "check_id",
    "expected",
    "computed",
    "tolerance",
    "passed",
    "paper_anchor",
    "informational",
    "note",
]


class CheckSpec(NamedTuple):
    """A check waiting to be computed."""

    check_id: str
    expected: float
    tolerance: float
    paper_anchor: str
    compute: Callable[[], float]
    informational: bool = False
    note: str = ""


class BenchmarkEvaluator:
    """
    Evaluates one command of the benchmark.

    Each check is computed inside its own try/except so that a failing
    computation becomes a failed CheckResult instead of aborting the run.
    """

    def __init__(self, config: Dict[str, Any], run: RunConfig):
        """
        Initialize evaluator.

        Args:
            config: Configuration dictionary (from config.yaml)
            run: Validated settings of this run
        """
        self.config = config
        self.run = run
        self.logger = logging.getLogger("evaluation.evaluator")
        self.stream = RandomStream(seed=run.seed)
        self.settings = OptimizerSettings.from_config(config).model_copy(
            update={"seed": run.seed}
        )

        self.results: List[CheckResult] = []
        self.rows: List[Dict[str, Any]] = []
        self.fieldnames: Optional[List[str]] = None
        self.extra_summary: Dict[str, Any] = {}

        self.logger.info(f"BenchmarkEvaluator initialized ({run.command}, seed={run.seed})")

    def section(self, name: str) -> Dict[str, Any]:
        """Config section ``runs.<name>`` with an empty default."""
        return self.config.get("runs", {}).get(name, {}) or {}

    def map_tasks(self, func: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """Apply func to every item on the worker pool; results keep input order."""
        items = list(items)
        if self.run.workers == 1 or len(items) < 2:
            return [func(item) for item in items]
        with ThreadPoolExecutor(max_workers=self.run.workers) as pool:
            return list(pool.map(func, items))

    def run_checks(self, specs: Iterable[CheckSpec]) -> List[CheckResult]:
        """
        Compute each check and compare it with its expected value.

        Args:
            specs: Checks to evaluate

        Returns:
            The CheckResults of this batch (also appended to self.results)
        """
        batch: List[CheckResult] = []
        for spec in specs:
            try:
                result = CheckResult.compare(
                    check_id=spec.check_id,
                    expected=spec.expected,
                    computed=spec.compute(),
                    tolerance=spec.tolerance,
                    paper_anchor=spec.paper_anchor,
                    informational=spec.informational,
                    note=spec.note,
                )
            except Exception as e:
                self.logger.error(f"Error computing check {spec.check_id}: {e}")
                result = CheckResult.errored(
                    check_id=spec.check_id,
                    expected=spec.expected,
                    tolerance=spec.tolerance,
                    paper_anchor=spec.paper_anchor,
                    error=e,
                    informational=spec.informational,
                )

            if not result.passed:
                level = logging.INFO if result.informational else logging.WARNING
                self.logger.log(
                    level,
                    f"{result.check_id}: expected {result.expected!r}, "
                    f"computed {result.computed!r} (tol {result.tolerance:g})",
                )
            batch.append(result)

        self.results.extend(batch)
        return batch

    def evaluate(self) -> Dict[str, Any]:
        """
        Run the configured command, then build and save the report.

        Returns:
            The report dictionary that was written
        """
        from .conjecture import run_conjecture
        from .scan import run_scan
        from .suites import run_oracle_check, run_reproduce

        commands = {
            "reproduce": run_reproduce,
            "scan": run_scan,
            "oracle-check": run_oracle_check,
            "conjecture": run_conjecture,
        }
        self.logger.info(f"Starting {self.run.command}")
        commands[self.run.command](self)

        report = self._generate_report()
        self._save_results(report)

        summary = report["summary"]
        self.logger.info(
            f"Finished {self.run.command}: {summary['passed']} passed, "
            f"{summary['failed']} failed, {summary['informational']} informational"
        )
        return report

    def exit_status(self) -> int:
        """0 when every non-informational check passed, 1 otherwise."""
        failed = [r for r in self.results if not r.informational and not r.passed]
        return 1 if failed else 0

    def _generate_report(self) -> Dict[str, Any]:
        """Assemble config, checks, summary and any command payload."""
        graded = [r for r in self.results if not r.informational]
        summary = {
            "passed": sum(1 for r in graded if r.passed),
            "failed": sum(1 for r in graded if not r.passed),
            "informational": len(self.results) - len(graded),
        }
        summary.update(self.extra_summary)

        report: Dict[str, Any] = {
            "config": self.run.public(),
            "checks": [r.model_dump() for r in self.results],
            "summary": summary,
        }
        if self.fieldnames is not None:
            key = "samples" if self.run.command == "conjecture" else "rows"
            report[key] = self.rows
        return report

    def _save_results(self, report: Dict[str, Any]) -> None:
        """Write the report in the chosen format and the text summary next to it."""
        output = Path(self.run.output_path)

        if self.run.format == "json":
            write_json(output, report)
        elif self.fieldnames is not None:
            write_csv(output, self.fieldnames, self.rows, self.run.seed)
        else:
            write_csv(output, CHECK_FIELDS, report["checks"], self.run.seed)
        self.logger.info(f"Report saved to {output}")

        summary_file = summary_path(output)
        write_summary(summary_file, report)
        self.logger.info(f"Summary saved to {summary_file}")
