"""
zzsim.spectrum.sweep

Barridos 1D/2D de ζ y de niveles de energía sobre un dispositivo plantilla.

Parámetros barribles:
- delta_mhz       : Δ, moviendo la frecuencia del modo a (ν_b fijo)
- delta_alpha_mhz : δ_α = |α_b| − |α_a| (ver apply_asymmetry)
- g_mhz           : fuerza de acoplo (g, o g_a = g_b con resonador)

La salida es siempre row-major (eje 1 exterior, eje 2 interior) y no
depende de `threads`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional, Sequence

import numpy as np

from zzsim.errors import ConfigError, GridError, PoleError
from zzsim.model.device import DeviceSpec, apply_asymmetry, bare_labels
from zzsim.utils.logger import global_log, log_duration
from zzsim.utils.parallel import map_points
from zzsim.utils.table import Table

from .labeling import device_spectrum
from .zz import closed_form_inputs, zz_analytic, zz_numeric, zz_perturbative

SweepParameter = Literal["delta_mhz", "delta_alpha_mhz", "g_mhz"]
SWEEP_PARAMETERS = ("delta_mhz", "delta_alpha_mhz", "g_mhz")


@dataclass(frozen=True)
class SweepAxis:
    parameter: SweepParameter
    start: float
    stop: float
    points: int

    def __post_init__(self) -> None:
        if self.parameter not in SWEEP_PARAMETERS:
            raise ConfigError("parameter", f"unknown sweep parameter {self.parameter!r}")
        if int(self.points) != self.points or self.points < 1:
            raise GridError(f"Sweep axis {self.parameter!r} needs at least one point, got {self.points!r}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise GridError(f"Sweep axis {self.parameter!r} has a non-finite bound")
        if self.points == 1 and self.start != self.stop:
            raise GridError(f"Single-point axis {self.parameter!r} needs start == stop")

    def values(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, int(self.points))


def apply_parameter(
    device: DeviceSpec,
    parameter: str,
    value: float,
    asymmetry_on: Literal["a", "b"] = "b",
) -> DeviceSpec:
    if parameter == "delta_mhz":
        return device.with_detuning(value)
    if parameter == "delta_alpha_mhz":
        return apply_asymmetry(device, value, on=asymmetry_on)
    if parameter == "g_mhz":
        return device.with_coupling_strength(value)
    raise ConfigError("parameter", f"unknown sweep parameter {parameter!r}")


def _grid(
    device: DeviceSpec,
    axes: Sequence[SweepAxis],
    asymmetry_on: Literal["a", "b"],
) -> list[tuple[tuple[float, ...], DeviceSpec]]:
    grids = [ax.values() for ax in axes]
    points = []
    for coords in _row_major(grids):
        dev = device
        for ax, value in zip(axes, coords):
            dev = apply_parameter(dev, ax.parameter, value, asymmetry_on)
        points.append((tuple(float(v) for v in coords), dev))
    return points


def _row_major(grids: list[np.ndarray]) -> list[tuple[float, ...]]:
    if len(grids) == 1:
        return [(v,) for v in grids[0]]
    return [(v1, v2) for v1 in grids[0] for v2 in grids[1]]


def _axes(axis1: SweepAxis, axis2: Optional[SweepAxis]) -> list[SweepAxis]:
    axes = [axis1] if axis2 is None else [axis1, axis2]
    if axis2 is not None and axis1.parameter == axis2.parameter:
        raise GridError(f"Both sweep axes vary {axis1.parameter!r}")
    return axes


# ---------------------------------------------------------------------------
# Evaluadores por punto (nivel de módulo: se envían a multiprocessing)
# ---------------------------------------------------------------------------


def _closed_form_or_nan(func, device: DeviceSpec) -> float:
    try:
        return func(*closed_form_inputs(device)).zeta
    except PoleError:
        return math.nan


def _zz_point(device: DeviceSpec) -> dict:
    numeric = zz_numeric(device)
    row = {"zeta_numeric_mhz": numeric.zeta, "degenerate_flag": numeric.degenerate_flag}
    if not device.has_resonator:
        row["zeta_analytic_mhz"] = _closed_form_or_nan(zz_analytic, device)
        row["zeta_perturbative_mhz"] = _closed_form_or_nan(zz_perturbative, device)
    return row


def _level_point(device: DeviceSpec) -> list[float]:
    spectrum = device_spectrum(device)
    return [entry.energy for entry in spectrum.entries]


def label_name(label: tuple[int, ...]) -> str:
    return "".join(str(n) for n in label)


def sweep_zz(
    device_template: DeviceSpec,
    axis1: SweepAxis,
    axis2: Optional[SweepAxis] = None,
    threads: int = 1,
    asymmetry_on: Literal["a", "b"] = "b",
) -> Table:
    """
    Barrido de ζ (numérico, y formas cerradas si el acoplo es directo).

    Columnas: <parámetros…>, zeta_numeric_mhz, [zeta_analytic_mhz,
    zeta_perturbative_mhz,] degenerate_flag. En un polo de las formas
    cerradas la celda vale NaN.
    """
    axes = _axes(axis1, axis2)
    points = _grid(device_template, axes, asymmetry_on)

    zeta_columns = ["zeta_numeric_mhz"]
    if not device_template.has_resonator:
        zeta_columns += ["zeta_analytic_mhz", "zeta_perturbative_mhz"]
    table = Table(columns=[ax.parameter for ax in axes] + zeta_columns + ["degenerate_flag"])

    with log_duration("sweep_zz_done", points=len(points), threads=threads):
        results = map_points(_zz_point, [dev for _, dev in points], threads)

    for (coords, _), result in zip(points, results):
        row = {ax.parameter: value for ax, value in zip(axes, coords)}
        row.update(result)
        global_log("debug", "sweep_point", **row)
        table.append(row)
    return table


def level_sweep(
    device: DeviceSpec,
    axis: SweepAxis,
    threads: int = 1,
    asymmetry_on: Literal["a", "b"] = "b",
) -> Table:
    """
    Diagrama de niveles: energía etiquetada de cada estado desnudo vs. un parámetro.

    Columnas: <parámetro>, energy_<etiqueta>_ghz para todas las etiquetas
    en orden lineal (p.ej. energy_11_ghz, o energy_110_ghz con resonador).
    """
    points = _grid(device, [axis], asymmetry_on)
    names = [f"energy_{label_name(lbl)}_ghz" for lbl in bare_labels(device.dims)]
    table = Table(columns=[axis.parameter] + names)

    with log_duration("level_sweep_done", points=len(points), threads=threads):
        results = map_points(_level_point, [dev for _, dev in points], threads)

    for (coords, _), energies in zip(points, results):
        row = {axis.parameter: coords[0]}
        row.update(dict(zip(names, energies)))
        table.append(row)
    return table
