"""
Numerical Tolerances
Every tolerance used by the library lives here so there is one tuning surface.
"""

# Structural checks: normalization, hermiticity of states, unit trace.
STRUCTURAL_TOL = 1e-12

# Smallest eigenvalue a density matrix may have.
PSD_SLACK = -1e-10

# Agreement between two independent evaluations of the same quantity.
ORACLE_TOL = 1e-10

# Input to hermitian_spectrum must be Hermitian to this (relative) level.
HERMITIAN_TOL = 1e-10

# Relative reconstruction residual an eigendecomposition must certify.
EIGEN_RESIDUAL_TOL = 1e-10

# Ensemble weights below this are dropped when splitting a mixed resource.
ENSEMBLE_DROP_TOL = 1e-12

# Outcome probabilities below this have no defined conditional state.
ZERO_PROBABILITY_TOL = 1e-14

# Largest register handled (2**6 = 64 dimensional).
MAX_QUBITS = 6
