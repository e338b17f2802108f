"""
zzsim.dynamics.frame

Marco lógico |‾ij⟩: autoestados vestidos del dispositivo en el punto de
aparcamiento, etiquetados por máximo solapamiento y con fase fijada
(componente de mayor módulo real y positiva).

Sobre ese marco se proyecta el propagador (matriz 4×4 posiblemente
sub-unitaria) y se calculan poblaciones.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import trapezoid

from zzsim.errors import FrameError
from zzsim.model.device import DeviceSpec, computational_labels
from zzsim.pulse.flat_top import PulseSpec, frequencies_at, sample_pulse
from zzsim.spectrum.labeling import AMBIGUOUS_OVERLAP, device_spectrum
from zzsim.spectrum.zz import zz_numeric
from zzsim.utils.table import Table

from .propagator import Propagator, StepperName, propagate_series

LOGICAL_LABELS = ("00", "01", "10", "11")


@dataclass(frozen=True)
class LogicalFrame:
    """
    basis_vectors : matriz (d, 4) con |‾00⟩, |‾01⟩, |‾10⟩, |‾11⟩ por columnas.
    """

    basis_vectors: np.ndarray = field(repr=False)
    overlap_sq: tuple[float, ...]
    parking_frequency: float

    def vector(self, label: str) -> np.ndarray:
        return self.basis_vectors[:, LOGICAL_LABELS.index(label)]


@dataclass(frozen=True)
class LogicalProjection:
    matrix: np.ndarray  # P_ij = ⟨‾i|U|‾j⟩
    leakage: np.ndarray  # 1 − Σ_i |P_ij|² por columna


@dataclass(frozen=True)
class Populations:
    probabilities: dict[str, float]
    non_logical: float

    @property
    def total(self) -> float:
        return sum(self.probabilities.values()) + self.non_logical


def _fix_phase(vector: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(vector)))
    return vector * (np.conj(vector[k]) / abs(vector[k]))


def logical_frame(device: DeviceSpec, parking_frequency_a: float) -> LogicalFrame:
    """
    Errores
    -------
    FrameError si algún estado computacional tiene solapamiento² < 0.5
    (aparcamiento demasiado cerca de un cruce).
    """
    spectrum = device_spectrum(device, frequency_override_a=parking_frequency_a)
    columns, overlaps = [], []
    for label in computational_labels(device.dims):
        state = spectrum.state(label)
        if state.overlap_sq < AMBIGUOUS_OVERLAP:
            raise FrameError(
                f"Logical state {label} is ambiguous at parking {parking_frequency_a} GHz "
                f"(overlap² = {state.overlap_sq:.3f})"
            )
        columns.append(_fix_phase(state.eigenvector))
        overlaps.append(state.overlap_sq)
    return LogicalFrame(
        basis_vectors=np.stack(columns, axis=1),
        overlap_sq=tuple(overlaps),
        parking_frequency=float(parking_frequency_a),
    )


def _matrix(U: Propagator | np.ndarray) -> np.ndarray:
    return U.matrix if isinstance(U, Propagator) else np.asarray(U)


def project_logical(U: Propagator | np.ndarray, frame: LogicalFrame) -> LogicalProjection:
    B = frame.basis_vectors
    P = B.conj().T @ _matrix(U) @ B
    leakage = np.clip(1.0 - np.sum(np.abs(P) ** 2, axis=0), 0.0, 1.0)
    return LogicalProjection(matrix=P, leakage=leakage)


def populations(U: Propagator | np.ndarray, frame: LogicalFrame, initial: str) -> Populations:
    """P_‾ij = |⟨‾ij|U|initial⟩|² y el resto fuera del subespacio lógico."""
    if initial not in LOGICAL_LABELS:
        raise ValueError(f"Unknown logical state {initial!r}; expected one of {LOGICAL_LABELS}")
    psi = _matrix(U) @ frame.vector(initial)
    amplitudes = frame.basis_vectors.conj().T @ psi
    probs = {lbl: float(abs(a) ** 2) for lbl, a in zip(LOGICAL_LABELS, amplitudes)}
    non_logical = max(0.0, float(np.vdot(psi, psi).real) - sum(probs.values()))
    return Populations(probabilities=probs, non_logical=non_logical)


def population_series(
    device: DeviceSpec,
    pulse: PulseSpec,
    initial: str,
    scheme: StepperName = "midpoint",
    stride: int = 1,
) -> Table:
    """
    Evolución temporal de las poblaciones lógicas desde `initial`.

    Columnas: t_ns, freq_ghz, p00, p01, p10, p11, p_non_logical.
    """
    if stride < 1:
        raise ValueError("stride must be >= 1")
    frame = logical_frame(device, pulse.parking_frequency)
    times, stack = propagate_series(device, pulse, scheme)
    freqs = frequencies_at(pulse, times)

    table = Table(columns=["t_ns", "freq_ghz", "p00", "p01", "p10", "p11", "p_non_logical"])
    for k in range(0, len(times), stride):
        pops = populations(stack[k], frame, initial)
        row = {"t_ns": float(times[k]), "freq_ghz": float(freqs[k])}
        row.update({f"p{lbl}": p for lbl, p in pops.probabilities.items()})
        row["p_non_logical"] = pops.non_logical
        table.append(row)
    return table


def adiabatic_conditional_phase(device: DeviceSpec, pulse: PulseSpec) -> float:
    """
    Fase condicional por seguimiento adiabático: 2π·∫ζ(ν_a(t)) dt (rad, sin envolver).

    ζ se evalúa en GHz sobre las muestras del pulso; las frecuencias
    repetidas (meseta, padding) se calculan una sola vez.
    """
    samples = sample_pulse(pulse)
    cache: dict[float, float] = {}
    zetas = np.empty(len(samples))
    for k, freq in enumerate(samples.frequencies):
        key = float(freq)
        if key not in cache:
            cache[key] = zz_numeric(device.with_frequency_a(key)).zeta * 1e-3
        zetas[k] = cache[key]
    return float(2.0 * np.pi * trapezoid(zetas, samples.times))
