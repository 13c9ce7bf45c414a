"""
Channels Module
Teleportation channels and the brute-force six-qubit protocol oracle.
"""

from .protocol import (
    OutcomeRecord,
    TraceIdentityResiduals,
    coefficient_matrix,
    protocol_oracle,
    recovery_trace_residual,
    resource_ensemble,
    trace_identity_residuals,
)
from .teleport import (
    apply_superoperator,
    bell_overlap_matrix,
    bichannel_E0,
    bichannel_E1,
    bichannel_superoperator,
    channel_T0,
    channel_T1,
    single_channel_superoperator,
    upsilon_overlap_matrix,
)

__all__ = [
    "OutcomeRecord",
    "TraceIdentityResiduals",
    "coefficient_matrix",
    "protocol_oracle",
    "recovery_trace_residual",
    "resource_ensemble",
    "trace_identity_residuals",
    "apply_superoperator",
    "bell_overlap_matrix",
    "bichannel_E0",
    "bichannel_E1",
    "bichannel_superoperator",
    "channel_T0",
    "channel_T1",
    "single_channel_superoperator",
    "upsilon_overlap_matrix",
]
