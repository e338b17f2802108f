"""
gates: Puertas objetivo, fidelidad, virtual-Z y métricas de simulación.
"""

from .angles import extract_angles, wrap_angle
from .fidelity import average_fidelity, canonicalize_virtual_z, virtual_z
from .simulate import METRIC_COLUMNS, GateMetrics, default_pulse, simulate_gate
from .targets import GATE_NAMES, GateKind, parse_gate_kind, target_unitary

__all__ = [
    "extract_angles",
    "wrap_angle",
    "average_fidelity",
    "canonicalize_virtual_z",
    "virtual_z",
    "METRIC_COLUMNS",
    "GateMetrics",
    "default_pulse",
    "simulate_gate",
    "GATE_NAMES",
    "GateKind",
    "parse_gate_kind",
    "target_unitary",
]
