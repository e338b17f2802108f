"""
zzsim.optimize.asymmetry

Robustez frente a la asimetría de anharmonicidad δ_α = |α_b| − |α_a|:
en cada punto se recalibra la puerta y se informa del canal de error
dominante (leakage, swap_angle o conditional_phase).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from zzsim.dynamics.propagator import StepperName
from zzsim.errors import GridError
from zzsim.gates.targets import GateKind
from zzsim.model.device import DeviceSpec, apply_asymmetry
from zzsim.pulse.flat_top import DEFAULT_PADDING_NS, DEFAULT_RAMP_NS, DEFAULT_TIME_STEP_NS
from zzsim.utils.logger import global_log, log_duration
from zzsim.utils.parallel import map_points
from zzsim.utils.table import Table

from .calibration import (
    DEFAULT_HOLD_STEP_NS,
    DEFAULT_OVERSHOOT_BOUNDS_MHZ,
    CalibrationResult,
    Objective,
    calibrate_gate,
)

ASYMMETRY_COLUMNS = [
    "delta_alpha_mhz",
    "hold_ns",
    "overshoot_mhz",
    "fidelity",
    "infidelity",
    "eps_leak",
    "eps_swap",
    "d_theta",
    "d_phi",
    "dominant_error",
]


@dataclass(frozen=True)
class _AsymmetryJob:
    device: DeviceSpec
    kind: GateKind
    hold_bounds: tuple[float, float]
    hold_step: float
    overshoot_bounds: tuple[float, float]
    objective: Optional[Objective]
    parking_frequency: Optional[float]
    ramp: float
    time_step: float
    padding: float
    scheme: StepperName


def _run_asymmetry_job(job: _AsymmetryJob) -> CalibrationResult:
    return calibrate_gate(
        job.device,
        job.kind,
        hold_bounds=job.hold_bounds,
        hold_step=job.hold_step,
        overshoot_bounds=job.overshoot_bounds,
        objective=job.objective,
        parking_frequency=job.parking_frequency,
        ramp=job.ramp,
        time_step=job.time_step,
        padding=job.padding,
        scheme=job.scheme,
    )


def widened_overshoot_bounds(bounds: tuple[float, float], delta_alpha: float) -> tuple[float, float]:
    margin = abs(float(delta_alpha))
    return float(bounds[0]) - margin, float(bounds[1]) + margin


def asymmetry_sweep(
    device_template: DeviceSpec,
    kind: GateKind,
    delta_alpha_range: tuple[float, float],
    points: int,
    hold_bounds: tuple[float, float] = (12.0, 24.0),
    hold_step: float = DEFAULT_HOLD_STEP_NS,
    overshoot_bounds: tuple[float, float] = DEFAULT_OVERSHOOT_BOUNDS_MHZ,
    objective: Optional[Objective] = None,
    on: Literal["a", "b"] = "b",
    parking_frequency: Optional[float] = None,
    ramp: float = DEFAULT_RAMP_NS,
    time_step: float = DEFAULT_TIME_STEP_NS,
    padding: float = DEFAULT_PADDING_NS,
    scheme: StepperName = "midpoint",
    threads: int = 1,
) -> Table:
    """
    Tabla (δ_α, hold, overshoot, F, 1−F, ε_leak, ε_swap, δθ, δφ, canal dominante).

    La asimetría se impone con apply_asymmetry(on=...). Cada punto se
    recalibra por completo; el paralelismo es sobre los puntos de δ_α.

    Las resonancias |11⟩–|20⟩ y |11⟩–|02⟩ se separan δ_α, así que la ventana
    de overshoot de cada punto se ensancha |δ_α| por cada lado (la fila
    δ_α = 0 usa `overshoot_bounds` tal cual).
    """
    if int(points) != points or points < 1:
        raise GridError(f"Asymmetry sweep needs at least one point, got {points!r}")
    lo, hi = float(delta_alpha_range[0]), float(delta_alpha_range[1])
    if points == 1 and lo != hi:
        raise GridError("Single-point asymmetry sweep needs start == stop")
    deltas = [float(d) for d in np.linspace(lo, hi, int(points))]

    jobs = [
        _AsymmetryJob(
            apply_asymmetry(device_template, d, on=on),
            kind,
            tuple(hold_bounds),
            hold_step,
            widened_overshoot_bounds(overshoot_bounds, d),
            objective,
            parking_frequency,
            ramp,
            time_step,
            padding,
            scheme,
        )
        for d in deltas
    ]
    with log_duration("asymmetry_sweep_done", gate=kind.label, points=len(jobs), threads=threads):
        results = map_points(_run_asymmetry_job, jobs, threads)

    table = Table(columns=list(ASYMMETRY_COLUMNS))
    for delta, result in zip(deltas, results):
        m = result.metrics_at_optimum
        row = {
            "delta_alpha_mhz": delta,
            "hold_ns": result.best_hold,
            "overshoot_mhz": result.best_overshoot,
            "fidelity": m.fidelity,
            "infidelity": 1.0 - m.fidelity,
            "eps_leak": m.epsilon_leak,
            "eps_swap": m.epsilon_swap,
            "d_theta": m.delta_theta,
            "d_phi": m.delta_phi,
            "dominant_error": m.dominant_error(),
        }
        global_log("debug", "asymmetry_point", **{k: row[k] for k in ("delta_alpha_mhz", "overshoot_mhz", "fidelity", "dominant_error")})
        table.append(row)
    return table
