"""
optimize: Calibración de overshoot y hold, y barridos de robustez.
"""

from .asymmetry import ASYMMETRY_COLUMNS, asymmetry_sweep
from .calibration import (
    HOLD_SCAN_COLUMNS,
    OBJECTIVES,
    CalibrationResult,
    calibrate_gate,
    default_objective,
    hold_grid,
    hold_scan,
    objective_value,
    optimize_overshoot,
)
from .golden import golden_section

__all__ = [
    "ASYMMETRY_COLUMNS",
    "asymmetry_sweep",
    "HOLD_SCAN_COLUMNS",
    "OBJECTIVES",
    "CalibrationResult",
    "calibrate_gate",
    "hold_grid",
    "hold_scan",
    "default_objective",
    "objective_value",
    "optimize_overshoot",
    "golden_section",
]
