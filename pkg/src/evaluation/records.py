"""
Run Records
Validated run configuration and the result records that go into reports.
"""

from typing import Any, Dict, Literal, Optional

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

Command = Literal["reproduce", "scan", "oracle-check", "conjecture"]
Family = Literal["iso", "gs", "ghz", "w"]
Sampler = Literal["ginibre", "ups_mixture", "smolin_mixture"]
ReportFormat = Literal["csv", "json"]


class RunConfig(BaseModel):
    """Merged config file, environment and command-line values for one run."""

    model_config = ConfigDict(frozen=True)

    command: Command
    seed: int = Field(ge=0, lt=2**64)
    samples: int = Field(ge=1)
    grid_points: int = Field(ge=2)
    tolerance: float = Field(gt=0.0)
    output_path: str
    format: ReportFormat = "json"
    workers: int = Field(default=1, ge=1)
    family: Optional[Family] = None
    sampler: Optional[Sampler] = None
    epsilon: Optional[float] = Field(default=None, ge=0.0, le=math.pi / 2)

    def public(self) -> Dict[str, Any]:
        """Fields written into reports (workers excluded so outputs match across thread counts)."""
        return self.model_dump(exclude={"workers"})


class CheckResult(BaseModel):
    """One expected-vs-computed comparison."""

    model_config = ConfigDict(frozen=True)

    check_id: str
    expected: float
    computed: Optional[float]
    tolerance: float = Field(ge=0.0)
    passed: bool
    paper_anchor: str = Field(min_length=1)
    informational: bool = False
    note: str = ""

    @model_validator(mode="after")
    def _passed_matches_tolerance(self) -> "CheckResult":
        if self.passed != self.within(self.expected, self.computed, self.tolerance):
            raise ValueError(f"{self.check_id}: passed flag contradicts tolerance rule")
        return self

    @staticmethod
    def within(expected: float, computed: Optional[float], tolerance: float) -> bool:
        if computed is None or not math.isfinite(computed):
            return False
        return abs(expected - computed) <= tolerance

    @classmethod
    def compare(
        cls,
        check_id: str,
        expected: float,
        computed: Optional[float],
        tolerance: float,
        paper_anchor: str,
        informational: bool = False,
        note: str = "",
    ) -> "CheckResult":
        computed = None if computed is None else float(computed)
        return cls(
            check_id=check_id,
            expected=float(expected),
            computed=computed,
            tolerance=tolerance,
            passed=cls.within(expected, computed, tolerance),
            paper_anchor=paper_anchor,
            informational=informational,
            note=note,
        )

    @classmethod
    def errored(
        cls,
        check_id: str,
        expected: float,
        tolerance: float,
        paper_anchor: str,
        error: Exception,
        informational: bool = False,
    ) -> "CheckResult":
        return cls(
            check_id=check_id,
            expected=float(expected),
            computed=None,
            tolerance=tolerance,
            passed=False,
            paper_anchor=paper_anchor,
            informational=informational,
            note=f"error: {error}",
        )


class ConjectureSample(BaseModel):
    """One resource examined by the conjecture scan."""

    model_config = ConfigDict(frozen=True)

    sample_index: int = Field(ge=0)
    resource_descriptor: str
    stream_id: int = Field(ge=0)
    gsf: float
    gsf_max: float
    max_output_negativity: float
    epsilon_at_max: float
    min_entangled_input: Optional[float] = None
    below_threshold: bool
    boundary: bool = False
    counterexample: bool = False

    @model_validator(mode="after")
    def _gsf_max_dominates(self) -> "ConjectureSample":
        if self.gsf_max < self.gsf - 1e-9:
            raise ValueError("gsf_max fell below gsf")
        return self
