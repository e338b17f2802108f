"""
API de alto nivel: ejecuta una tarea de la CLI a partir de un RunConfig.

Cada tarea encadena los módulos numéricos y devuelve una tabla más un
resumen de una línea. No escribe ficheros: eso es cosa de la CLI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional

from zzsim.dynamics.frame import population_series
from zzsim.errors import PoleError
from zzsim.gates.simulate import METRIC_COLUMNS, simulate_gate
from zzsim.io.run_config import RunConfig, load_run_config
from zzsim.optimize.asymmetry import asymmetry_sweep
from zzsim.optimize.calibration import calibrate_gate, hold_scan
from zzsim.pulse.flat_top import pulse_table
from zzsim.spectrum.sweep import level_sweep, sweep_zz
from zzsim.spectrum.zz import closed_form_inputs, zz_analytic, zz_numeric, zz_on_off, zz_perturbative
from zzsim.utils.logger import global_log
from zzsim.utils.table import Table


@dataclass
class TaskResult:
    task: str
    table: Table
    summary: str


def _fmt(value: float, spec: str = ".3f") -> str:
    text = format(value, spec)
    # "-0.000" y "0.000" son el mismo resultado
    return text[1:] if text.startswith("-") and float(text) == 0.0 else text


def _pulse_kwargs(config: RunConfig) -> dict[str, Any]:
    p = config.pulse
    return {
        "parking_frequency": p.parking_ghz,
        "ramp": p.ramp_ns,
        "time_step": p.time_step_ns,
        "padding": p.padding_ns,
        "scheme": config.scheme,
    }


# ---------------------------------------------------------------------------
# Tareas
# ---------------------------------------------------------------------------


def _task_spectrum(config: RunConfig) -> TaskResult:
    axis = config.sweep.axes[0]
    table = level_sweep(config.device, axis, threads=config.threads, asymmetry_on=config.sweep.asymmetry_on)
    return TaskResult("spectrum", table, f"spectrum: {len(table)} points x {config.device.dimension} levels")


def _task_zz(config: RunConfig) -> TaskResult:
    device = config.device
    numeric = zz_numeric(device)
    columns = ["delta_mhz", "delta_alpha_mhz", "zeta_numeric_mhz"]
    row: dict[str, Any] = {
        "delta_mhz": device.detuning_mhz,
        "delta_alpha_mhz": device.delta_alpha_mhz,
        "zeta_numeric_mhz": numeric.zeta,
    }
    if not device.has_resonator:
        for name, func in (("zeta_analytic_mhz", zz_analytic), ("zeta_perturbative_mhz", zz_perturbative)):
            try:
                row[name] = func(*closed_form_inputs(device)).zeta
            except PoleError:
                row[name] = math.nan
            columns.append(name)
    columns.append("degenerate_flag")
    row["degenerate_flag"] = numeric.degenerate_flag

    summary = f"zeta = {_fmt(numeric.zeta)} MHz"
    if numeric.degenerate_flag:
        summary += " (degenerate)"
    if config.on_freq_a_ghz is not None:
        contrast = zz_on_off(device, device.mode_a.frequency, config.on_freq_a_ghz)
        columns += ["zeta_on_mhz", "on_off_ratio"]
        row["zeta_on_mhz"] = contrast.zeta_on
        row["on_off_ratio"] = contrast.ratio
        summary += f", zeta_on = {_fmt(contrast.zeta_on)} MHz, on/off = {_fmt(contrast.ratio, '.4g')}"

    table = Table(columns=columns)
    table.append(row)
    return TaskResult("zz", table, summary)


def _task_zz_sweep(config: RunConfig) -> TaskResult:
    axes = config.sweep.axes
    table = sweep_zz(
        config.device,
        axes[0],
        axes[1] if len(axes) > 1 else None,
        threads=config.threads,
        asymmetry_on=config.sweep.asymmetry_on,
    )
    zetas = [abs(z) for z in table.column("zeta_numeric_mhz")]
    return TaskResult("zz-sweep", table, f"zz-sweep: {len(table)} points, max |zeta| = {_fmt(max(zetas))} MHz")


def _metrics_summary(prefix: str, m) -> str:
    return (
        f"{prefix}: F = {m.fidelity:.6f}, eps_leak = {m.epsilon_leak:.2e}, "
        f"eps_swap = {m.epsilon_swap:.2e}, d_theta = {m.delta_theta:.2e}, d_phi = {m.delta_phi:.2e}"
    )


def _task_gate(config: RunConfig) -> TaskResult:
    pulse = config.pulse.build(config.device, config.gate)
    metrics = simulate_gate(config.device, pulse, config.gate, scheme=config.scheme)
    table = Table(columns=["hold_ns", "overshoot_mhz"] + METRIC_COLUMNS)
    table.append({"hold_ns": pulse.hold, "overshoot_mhz": pulse.overshoot, **metrics.to_row()})
    return TaskResult("gate", table, _metrics_summary(f"gate {config.gate.label}", metrics))


def _task_calibrate(config: RunConfig) -> TaskResult:
    cal = config.calibration
    result = calibrate_gate(
        config.device,
        config.gate,
        hold_bounds=cal.hold_bounds,
        hold_step=cal.hold_step,
        overshoot_bounds=cal.overshoot_bounds,
        objective=cal.objective,
        threads=config.threads,
        **_pulse_kwargs(config),
    )
    table = Table(columns=["hold_ns", "overshoot_mhz", "objective", "objective_value"] + METRIC_COLUMNS)
    table.append(
        {
            "hold_ns": result.best_hold,
            "overshoot_mhz": result.best_overshoot,
            "objective": result.objective,
            "objective_value": result.objective_value,
            **result.metrics_at_optimum.to_row(),
        }
    )
    prefix = f"calibrate {config.gate.label}: hold = {result.best_hold:.1f} ns, overshoot = {result.best_overshoot:.2f} MHz"
    return TaskResult("calibrate", table, _metrics_summary(prefix, result.metrics_at_optimum))


def _task_asymmetry_sweep(config: RunConfig) -> TaskResult:
    cal, asym = config.calibration, config.asymmetry
    table = asymmetry_sweep(
        config.device,
        config.gate,
        (asym.start_mhz, asym.stop_mhz),
        asym.points,
        hold_bounds=cal.hold_bounds,
        hold_step=cal.hold_step,
        overshoot_bounds=cal.overshoot_bounds,
        objective=cal.objective,
        on=asym.on,
        threads=config.threads,
        **_pulse_kwargs(config),
    )
    worst = min(table.column("fidelity"))
    return TaskResult(
        "asymmetry-sweep",
        table,
        f"asymmetry-sweep {config.gate.label}: {len(table)} points, min F = {worst:.6f}",
    )


def _task_pulse_dump(config: RunConfig) -> TaskResult:
    pulse = config.pulse.build(config.device, config.gate)
    table = pulse_table(pulse)
    return TaskResult(
        "pulse-dump",
        table,
        f"pulse-dump: {len(table)} samples, total = {pulse.total_duration:.3f} ns, target = {pulse.target_frequency:.6f} GHz",
    )


def _task_hold_scan(config: RunConfig) -> TaskResult:
    cal = config.calibration
    table = hold_scan(
        config.device,
        config.gate,
        config.holds,
        overshoot_bounds=cal.overshoot_bounds,
        objective=cal.objective,
        threads=config.threads,
        **_pulse_kwargs(config),
    )
    leak = table.column("eps_leak")
    swap = table.column("eps_swap")
    holds = table.column("hold_ns")
    best_leak = holds[leak.index(min(leak))]
    best_swap = holds[swap.index(min(swap))]
    return TaskResult(
        "hold-scan",
        table,
        f"hold-scan {config.gate.label}: leakage-optimal hold = {best_leak:.1f} ns, swap-optimal hold = {best_swap:.1f} ns",
    )


def _task_population_dump(config: RunConfig) -> TaskResult:
    pulse = config.pulse.build(config.device, config.gate)
    table = population_series(config.device, pulse, config.initial, scheme=config.scheme, stride=config.stride)
    final = table.rows[-1]
    return TaskResult(
        "population-dump",
        table,
        f"population-dump from {config.initial}: final p{config.initial} = {final['p' + config.initial]:.6f}, "
        f"non-logical = {final['p_non_logical']:.2e}",
    )


_TASKS: dict[str, Callable[[RunConfig], TaskResult]] = {
    "spectrum": _task_spectrum,
    "zz": _task_zz,
    "zz-sweep": _task_zz_sweep,
    "gate": _task_gate,
    "calibrate": _task_calibrate,
    "asymmetry-sweep": _task_asymmetry_sweep,
    "pulse-dump": _task_pulse_dump,
    "hold-scan": _task_hold_scan,
    "population-dump": _task_population_dump,
}


def run_task(config: RunConfig) -> TaskResult:
    """Despacha la tarea del RunConfig y devuelve tabla + resumen."""
    global_log("info", "task_start", task=config.task, dimension=config.device.dimension, threads=config.threads)
    result = _TASKS[config.task](config)
    global_log("info", "task_done", task=config.task, rows=len(result.table))
    return result


def run_from_mapping(config: Mapping[str, Any], task: Optional[str] = None) -> TaskResult:
    """Atajo: load_run_config + run_task."""
    return run_task(load_run_config(config, task))
