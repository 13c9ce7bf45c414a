"""
Evaluation Module
Check suites, family scans, the conjecture scan and report writing.
"""

from .evaluator import BenchmarkEvaluator, CheckSpec
from .records import CheckResult, ConjectureSample, RunConfig

__all__ = [
    "BenchmarkEvaluator",
    "CheckSpec",
    "CheckResult",
    "ConjectureSample",
    "RunConfig",
]
