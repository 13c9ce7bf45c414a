"""
Metrics Module
Singlet fractions, fidelities, negativity, SLOCC filters and the closed forms
of the example resource families.
"""

from .entanglement import (
    FilterValues,
    e_tensor,
    filter_expectations,
    negativity,
    teleported_negativity,
)
from .fidelity import (
    METRIC_CONTEXT,
    MetricContext,
    MonteCarloEstimate,
    TwoDesignCheck,
    fidelity_pair,
    fidelity_single,
    haar_two_design_check,
    monte_carlo_fidelity,
    optimal_fidelity_pair,
    optimal_fidelity_single,
    singlet_fraction,
)
from .optimize import (
    OptimizerSettings,
    OptResult,
    generalized_singlet_fraction,
    max_generalized_singlet_fraction,
    max_singlet_fraction,
    upsilon_overlap,
)

__all__ = [
    "FilterValues",
    "e_tensor",
    "filter_expectations",
    "negativity",
    "teleported_negativity",
    "METRIC_CONTEXT",
    "MetricContext",
    "MonteCarloEstimate",
    "TwoDesignCheck",
    "fidelity_pair",
    "fidelity_single",
    "haar_two_design_check",
    "monte_carlo_fidelity",
    "optimal_fidelity_pair",
    "optimal_fidelity_single",
    "singlet_fraction",
    "OptimizerSettings",
    "OptResult",
    "generalized_singlet_fraction",
    "max_generalized_singlet_fraction",
    "max_singlet_fraction",
    "upsilon_overlap",
]
