"""
zzsim.optimize.calibration

Calibración determinista de pulsos: overshoot por barrido grueso +
sección áurea, y tiempo de hold sobre una rejilla fija.

Objetivos:
- "leakage"    : ε_leak (por defecto en la rama diagonal: minimizar fuga y
                 aceptar el error de swap residual)
- "infidelity" : 1 − F (por defecto en la rama swap, donde la fuga sola no
                 fija el ángulo de intercambio)

Entre holds con el mismo objetivo decide ε_swap y después 1 − F.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Literal, Optional, Sequence

import numpy as np

from zzsim.dynamics.frame import LogicalFrame, logical_frame
from zzsim.dynamics.propagator import StepperName
from zzsim.errors import CalibrationError, GridError
from zzsim.gates.simulate import GateMetrics, default_pulse, simulate_gate
from zzsim.gates.targets import GateKind
from zzsim.model.device import DeviceSpec
from zzsim.pulse.flat_top import DEFAULT_PADDING_NS, DEFAULT_RAMP_NS, DEFAULT_TIME_STEP_NS, PulseSpec
from zzsim.utils.logger import global_log, log_duration
from zzsim.utils.parallel import map_points
from zzsim.utils.table import Table

from .golden import golden_section

Objective = Literal["leakage", "infidelity"]
OBJECTIVES = ("leakage", "infidelity")

COARSE_POINTS = 17
OVERSHOOT_RESOLUTION_MHZ = 0.01
DEFAULT_HOLD_STEP_NS = 0.1
DEFAULT_OVERSHOOT_BOUNDS_MHZ = (-10.0, 10.0)

_TIE_TOL = 1e-12


@dataclass(frozen=True)
class CalibrationResult:
    best_hold: float
    best_overshoot: float
    objective_value: float
    metrics_at_optimum: GateMetrics
    trace: list[tuple[float, float, float]] = field(default_factory=list)
    refinement_trace: list[float] = field(default_factory=list)
    objective: Objective = "leakage"


def default_objective(kind: GateKind) -> Objective:
    return "leakage" if kind.branch == "diagonal" else "infidelity"


def _resolve_objective(kind: GateKind, objective: Optional[Objective]) -> Objective:
    resolved = default_objective(kind) if objective is None else objective
    if resolved not in OBJECTIVES:
        raise ValueError(f"Unknown objective: {resolved!r}")
    return resolved


def objective_value(metrics: GateMetrics, objective: Objective) -> float:
    if objective == "leakage":
        return metrics.epsilon_leak
    if objective == "infidelity":
        return 1.0 - metrics.fidelity
    raise ValueError(f"Unknown objective: {objective!r}")


def _check_bounds(bounds: tuple[float, float], name: str) -> tuple[float, float]:
    lo, hi = float(bounds[0]), float(bounds[1])
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise GridError(f"Invalid {name} bounds {bounds!r}")
    return lo, hi


def _as_key(value: float) -> float:
    return 0.0 if value == 0.0 else float(value)


def _pick(points: list[tuple[float, float]]) -> tuple[float, float]:
    """Mínimo finito; empates (≤ 1e−12) al menor |x|."""
    finite = [(x, y) for x, y in points if math.isfinite(y)]
    best_y = min(y for _, y in finite)
    return min(((x, y) for x, y in finite if y <= best_y + _TIE_TOL), key=lambda p: (abs(p[0]), p[0]))


def optimize_overshoot(
    device: DeviceSpec,
    pulse_template: PulseSpec,
    kind: GateKind,
    bounds: tuple[float, float] = DEFAULT_OVERSHOOT_BOUNDS_MHZ,
    objective: Optional[Objective] = None,
    frame: Optional[LogicalFrame] = None,
    scheme: StepperName = "midpoint",
) -> CalibrationResult:
    """
    Minimiza el objetivo en el overshoot (MHz) con el hold del pulso plantilla.

    Barrido grueso de 17 puntos sobre `bounds`; después sección áurea hasta
    0.01 MHz dentro del intervalo entre los vecinos del mejor punto grueso.
    Sin objetivo explícito se usa default_objective(kind).

    Errores
    -------
    CalibrationError si el objetivo no es finito en ningún punto grueso.
    """
    lo, hi = _check_bounds(bounds, "overshoot")
    objective = _resolve_objective(kind, objective)
    if frame is None:
        frame = logical_frame(device, pulse_template.parking_frequency)

    hold = pulse_template.hold
    evaluated: dict[float, tuple[float, GateMetrics]] = {}
    trace: list[tuple[float, float, float]] = []

    def evaluate(overshoot: float) -> float:
        key = _as_key(overshoot)
        if key not in evaluated:
            metrics = simulate_gate(device, replace(pulse_template, overshoot=key), kind, scheme=scheme, frame=frame)
            value = objective_value(metrics, objective)
            evaluated[key] = (value, metrics)
            trace.append((hold, key, value))
        return evaluated[key][0]

    coarse = [float(x) for x in np.linspace(lo, hi, COARSE_POINTS)]
    coarse_values = [evaluate(x) for x in coarse]
    if not any(math.isfinite(v) for v in coarse_values):
        raise CalibrationError(f"Objective {objective!r} is not finite at any coarse overshoot (hold = {hold} ns)")

    x_best, y_best = _pick(list(zip(coarse, coarse_values)))
    i = coarse.index(x_best)
    a, b = coarse[max(i - 1, 0)], coarse[min(i + 1, len(coarse) - 1)]

    refinement = [y_best]

    def refine(x: float) -> float:
        y = evaluate(x)
        refinement.append(min(refinement[-1], y) if math.isfinite(y) else refinement[-1])
        return y if math.isfinite(y) else math.inf

    golden_section(refine, a, b, tol=OVERSHOOT_RESOLUTION_MHZ)

    x_opt, y_opt = _pick([(x, y) for _, x, y in trace])
    global_log("debug", "overshoot_optimized", hold_ns=hold, overshoot_mhz=x_opt, objective=y_opt)
    return CalibrationResult(
        best_hold=hold,
        best_overshoot=x_opt,
        objective_value=y_opt,
        metrics_at_optimum=evaluated[x_opt][1],
        trace=trace,
        refinement_trace=refinement,
        objective=objective,
    )


# ---------------------------------------------------------------------------
# Rejilla de hold
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HoldJob:
    """Un punto de la rejilla de hold (picklable para multiprocessing)."""

    device: DeviceSpec
    kind: GateKind
    hold: float
    overshoot_bounds: tuple[float, float]
    objective: Optional[Objective]
    parking_frequency: Optional[float]
    ramp: float
    time_step: float
    padding: float
    scheme: StepperName

    def pulse(self) -> PulseSpec:
        return default_pulse(
            self.device,
            self.kind,
            hold=self.hold,
            parking_frequency=self.parking_frequency,
            ramp=self.ramp,
            time_step=self.time_step,
            padding=self.padding,
        )


def _run_hold_job(job: HoldJob) -> CalibrationResult:
    result = optimize_overshoot(
        job.device,
        job.pulse(),
        job.kind,
        bounds=job.overshoot_bounds,
        objective=job.objective,
        scheme=job.scheme,
    )
    global_log("debug", "calibration_hold", hold_ns=job.hold, overshoot_mhz=result.best_overshoot, objective=result.objective_value)
    return result


def hold_grid(hold_bounds: tuple[float, float], hold_step: float = DEFAULT_HOLD_STEP_NS) -> list[float]:
    """Rejilla inclusiva lo, lo + step, …, hi (redondeada a 1e−9 ns)."""
    lo, hi = _check_bounds(hold_bounds, "hold")
    if hold_step <= 0.0:
        raise GridError(f"hold_step must be > 0, got {hold_step!r}")
    n = int(math.floor((hi - lo) / hold_step + 1e-9))
    return [round(lo + k * hold_step, 9) for k in range(n + 1)]


def _jobs(
    device: DeviceSpec,
    kind: GateKind,
    holds: Sequence[float],
    overshoot_bounds: tuple[float, float],
    objective: Optional[Objective],
    parking_frequency: Optional[float],
    ramp: float,
    time_step: float,
    padding: float,
    scheme: StepperName,
) -> list[HoldJob]:
    _check_bounds(overshoot_bounds, "overshoot")
    objective = _resolve_objective(kind, objective)
    if not holds:
        raise GridError("Hold grid is empty")
    return [
        HoldJob(device, kind, float(h), tuple(overshoot_bounds), objective, parking_frequency, ramp, time_step, padding, scheme)
        for h in holds
    ]


def _better_hold(candidate: CalibrationResult, best: CalibrationResult) -> bool:
    if candidate.objective_value < best.objective_value - _TIE_TOL:
        return True
    if candidate.objective_value > best.objective_value + _TIE_TOL:
        return False
    c, b = candidate.metrics_at_optimum, best.metrics_at_optimum
    return (c.epsilon_swap, 1.0 - c.fidelity) < (b.epsilon_swap, 1.0 - b.fidelity)


def calibrate_gate(
    device: DeviceSpec,
    kind: GateKind,
    hold_bounds: tuple[float, float] = (12.0, 24.0),
    hold_step: float = DEFAULT_HOLD_STEP_NS,
    overshoot_bounds: tuple[float, float] = DEFAULT_OVERSHOOT_BOUNDS_MHZ,
    objective: Optional[Objective] = None,
    parking_frequency: Optional[float] = None,
    ramp: float = DEFAULT_RAMP_NS,
    time_step: float = DEFAULT_TIME_STEP_NS,
    padding: float = DEFAULT_PADDING_NS,
    scheme: StepperName = "midpoint",
    threads: int = 1,
) -> CalibrationResult:
    """
    Búsqueda anidada: para cada hold de la rejilla, overshoot óptimo;
    se queda con el hold de menor objetivo. Los empates (≤ 1e−12) se
    deciden por ε_swap, después por 1 − F y por último al hold menor.

    Retorno
    -------
    CalibrationResult con la traza completa (todas las evaluaciones de
    todos los holds, en orden de rejilla).
    """
    holds = hold_grid(hold_bounds, hold_step)
    jobs = _jobs(device, kind, holds, overshoot_bounds, objective, parking_frequency, ramp, time_step, padding, scheme)

    with log_duration("calibration_done", gate=kind.label, holds=len(jobs), threads=threads):
        per_hold = map_points(_run_hold_job, jobs, threads)

    best = per_hold[0]
    for result in per_hold[1:]:
        if _better_hold(result, best):
            best = result

    trace = [entry for result in per_hold for entry in result.trace]
    global_log(
        "info",
        "gate_calibrated",
        gate=kind.label,
        hold_ns=best.best_hold,
        overshoot_mhz=best.best_overshoot,
        fidelity=best.metrics_at_optimum.fidelity,
        eps_leak=best.metrics_at_optimum.epsilon_leak,
        eps_swap=best.metrics_at_optimum.epsilon_swap,
        objective=best.objective,
    )
    return replace(best, trace=trace)


HOLD_SCAN_COLUMNS = ["hold_ns", "overshoot_mhz", "fidelity", "eps_leak", "eps_swap"]


def hold_scan(
    device: DeviceSpec,
    kind: GateKind,
    holds: Sequence[float],
    overshoot_bounds: tuple[float, float] = DEFAULT_OVERSHOOT_BOUNDS_MHZ,
    objective: Optional[Objective] = None,
    parking_frequency: Optional[float] = None,
    ramp: float = DEFAULT_RAMP_NS,
    time_step: float = DEFAULT_TIME_STEP_NS,
    padding: float = DEFAULT_PADDING_NS,
    scheme: StepperName = "midpoint",
    threads: int = 1,
) -> Table:
    """
    Métricas frente al hold, con el overshoot óptimo en cada punto.

    Muestra que los holds óptimos para fuga y para error de swap no coinciden.
    """
    jobs = _jobs(device, kind, list(holds), overshoot_bounds, objective, parking_frequency, ramp, time_step, padding, scheme)
    with log_duration("hold_scan_done", gate=kind.label, holds=len(jobs), threads=threads):
        results = map_points(_run_hold_job, jobs, threads)

    table = Table(columns=list(HOLD_SCAN_COLUMNS))
    for result in results:
        m = result.metrics_at_optimum
        table.append(
            {
                "hold_ns": result.best_hold,
                "overshoot_mhz": result.best_overshoot,
                "fidelity": m.fidelity,
                "eps_leak": m.epsilon_leak,
                "eps_swap": m.epsilon_swap,
            }
        )
    return table
