"""
zzsim.dynamics.propagator

Propagación de la ecuación de Schrödinger bajo el pulso del modo a.

U = producto ordenado en el tiempo de exponenciales a tramos constantes,
exp(−i·K_k), sobre la rejilla uniforme del pulso. Los pasos consecutivos
con las mismas frecuencias de nodo (meseta y padding) se agrupan en una
sola exponencial exp(−i·K·count), que es exacta.

Las exponenciales se calculan en lote con np.linalg.eigh sobre los
generadores hermíticos.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from zzsim.errors import GridError, StepSizeError
from zzsim.model.device import DeviceSpec
from zzsim.model.hamiltonian import hamiltonian_parts
from zzsim.pulse.flat_top import PulseSpec, frequencies_at, time_grid
from zzsim.utils.logger import global_log

from .stepper_factory import StepperName, get_stepper

UNITARITY_TOL = 1e-7

_GRID_TOL = 1e-9


@dataclass(frozen=True)
class Propagator:
    matrix: np.ndarray = field(repr=False)
    time_step_used: float
    scheme: str = "midpoint"

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def unitarity_error(self) -> float:
        return unitarity_error(self.matrix)


def unitarity_error(U: np.ndarray) -> float:
    """max |U†U − I| elemento a elemento."""
    return float(np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0]))))


def _exponentials(generators: np.ndarray) -> np.ndarray:
    evals, evecs = np.linalg.eigh(generators)
    phases = np.exp(-1j * evals)
    return (evecs * phases[:, None, :]) @ np.conj(np.swapaxes(evecs, 1, 2))


def _step_window(times: np.ndarray, interval: Optional[tuple[float, float]]) -> tuple[int, int]:
    n_steps = len(times) - 1
    if interval is None:
        return 0, n_steps
    start, stop = interval
    dt = times[1] - times[0]
    i0, i1 = int(round(start / dt)), int(round(stop / dt))
    if not (0 <= i0 <= i1 <= n_steps):
        raise GridError(f"Interval {interval!r} outside the pulse grid [0, {times[-1]}]")
    if abs(times[i0] - start) > _GRID_TOL or abs(times[i1] - stop) > _GRID_TOL:
        raise GridError(f"Interval {interval!r} is not aligned with the time grid (dt = {dt!r} ns)")
    return i0, i1


def _node_frequencies(pulse: PulseSpec, left_times: np.ndarray, dt: float, nodes: tuple[float, ...]) -> np.ndarray:
    return np.stack([frequencies_at(pulse, left_times + c * dt) for c in nodes], axis=1)


def propagate(
    device: DeviceSpec,
    pulse: PulseSpec,
    scheme: StepperName = "midpoint",
    interval: Optional[tuple[float, float]] = None,
) -> Propagator:
    """
    Propagador completo del dispositivo bajo el pulso.

    Parámetros
    ----------
    scheme : "midpoint" (por defecto) o "magnus4".
    interval : (t_inicio, t_fin) sobre la rejilla global del pulso; por
        defecto todo el pulso. Permite comprobar U(0,T) = U(T/2,T)·U(0,T/2).

    Errores
    -------
    StepSizeError si la pérdida de unitariedad supera 1e−7.
    GridError si el intervalo no cae sobre la rejilla.
    """
    stepper = get_stepper(scheme)
    h_rest, n_a = hamiltonian_parts(device)
    times = time_grid(pulse)
    dt = float(times[1] - times[0])
    i0, i1 = _step_window(times, interval)

    U = np.eye(device.dimension, dtype=complex)
    if i1 > i0:
        freqs = _node_frequencies(pulse, times[i0:i1], dt, stepper.nodes)
        changed = np.any(freqs[1:] != freqs[:-1], axis=1)
        starts = np.flatnonzero(np.concatenate(([True], changed)))
        counts = np.diff(np.concatenate((starts, [len(freqs)])))

        generators = stepper.generators(h_rest, n_a, freqs[starts], dt) * counts[:, None, None]
        for step in _exponentials(generators):
            U = step @ U

    error = unitarity_error(U)
    if error > UNITARITY_TOL:
        raise StepSizeError(
            f"Propagator lost unitarity (max |U†U − I| = {error:.3e}); reduce time_step below {dt!r} ns"
        )
    global_log("debug", "propagate_done", scheme=scheme, steps=i1 - i0, dt_ns=dt, unitarity_error=error)
    return Propagator(matrix=U, time_step_used=dt, scheme=scheme)


def propagate_series(
    device: DeviceSpec,
    pulse: PulseSpec,
    scheme: StepperName = "midpoint",
) -> tuple[np.ndarray, np.ndarray]:
    """
    Propagadores acumulados U(0, t_k) en todos los puntos de la rejilla.

    Retorno
    -------
    (times, stack) con stack de forma (len(times), d, d); stack[0] = I.
    """
    stepper = get_stepper(scheme)
    h_rest, n_a = hamiltonian_parts(device)
    times = time_grid(pulse)
    dt = float(times[1] - times[0])

    freqs = _node_frequencies(pulse, times[:-1], dt, stepper.nodes)
    steps = _exponentials(stepper.generators(h_rest, n_a, freqs, dt))

    stack = np.empty((len(times), device.dimension, device.dimension), dtype=complex)
    stack[0] = np.eye(device.dimension)
    for k, step in enumerate(steps):
        stack[k + 1] = step @ stack[k]
    return times, stack
