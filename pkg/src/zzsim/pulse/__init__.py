"""
pulse: Trayectorias de frecuencia flat-top para el modo a.
"""

from .flat_top import (
    DEFAULT_PADDING_NS,
    DEFAULT_RAMP_NS,
    DEFAULT_TIME_STEP_NS,
    PulseSamples,
    PulseSpec,
    frequencies_at,
    frequency_at,
    measured_fwhm,
    pulse_table,
    sample_pulse,
    time_grid,
)

__all__ = [
    "DEFAULT_PADDING_NS",
    "DEFAULT_RAMP_NS",
    "DEFAULT_TIME_STEP_NS",
    "PulseSamples",
    "PulseSpec",
    "frequencies_at",
    "frequency_at",
    "measured_fwhm",
    "pulse_table",
    "sample_pulse",
    "time_grid",
]
