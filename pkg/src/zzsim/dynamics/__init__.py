"""
dynamics: Propagación temporal, marco lógico y poblaciones.
"""

from .frame import (
    LOGICAL_LABELS,
    LogicalFrame,
    LogicalProjection,
    Populations,
    adiabatic_conditional_phase,
    logical_frame,
    population_series,
    populations,
    project_logical,
)
from .propagator import Propagator, propagate, propagate_series, unitarity_error
from .stepper_factory import STEPPER_NAMES, get_stepper

__all__ = [
    "LOGICAL_LABELS",
    "LogicalFrame",
    "LogicalProjection",
    "Populations",
    "adiabatic_conditional_phase",
    "logical_frame",
    "population_series",
    "populations",
    "project_logical",
    "Propagator",
    "propagate",
    "propagate_series",
    "unitarity_error",
    "STEPPER_NAMES",
    "get_stepper",
]
