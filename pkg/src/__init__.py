"""qteleport-lab: two-qubit teleportation with four-qubit mixed resources."""

__version__ = "0.1.0"
