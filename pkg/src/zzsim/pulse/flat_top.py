"""
zzsim.pulse.flat_top

Trayectoria de frecuencia del modo a: pulso flat-top con rampas coseno.

Con x = t − padding:

    s(x) = (1 − cos(π·x/ramp))/2      0 ≤ x ≤ ramp
         = 1                          ramp ≤ x ≤ hold
         = (1 + cos(π·(x − hold)/ramp))/2   hold ≤ x ≤ hold + ramp
         = 0                          en el padding

    ν_a(t) = parking + (target − parking)·s(t)

s vale 1/2 en el centro de cada rampa, así que la anchura a media altura
es exactamente `hold`. La duración total es hold + ramp + 2·padding.

El overshoot (MHz) se suma más allá de la frecuencia de interacción, en
la dirección que se aleja del punto de aparcamiento.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from zzsim.errors import ConfigError, PulseDomainError
from zzsim.utils.table import Table

DEFAULT_RAMP_NS = 2.5
DEFAULT_TIME_STEP_NS = 0.01
DEFAULT_PADDING_NS = 1.0

_DOMAIN_TOL = 1e-9


@dataclass(frozen=True)
class PulseSpec:
    parking_frequency: float  # GHz
    interaction_frequency: float  # GHz
    hold: float  # ns (FWHM)
    overshoot: float = 0.0  # MHz
    ramp: float = DEFAULT_RAMP_NS
    time_step: float = DEFAULT_TIME_STEP_NS
    padding: float = DEFAULT_PADDING_NS

    def __post_init__(self) -> None:
        for name in ("parking_frequency", "interaction_frequency", "hold", "overshoot", "ramp", "time_step", "padding"):
            if not math.isfinite(getattr(self, name)):
                raise ConfigError(name, "must be finite")
        if self.parking_frequency <= 0.0 or self.interaction_frequency <= 0.0:
            raise ConfigError("parking_frequency", "pulse frequencies must be > 0 GHz")
        if self.time_step <= 0.0:
            raise ConfigError("time_step", f"must be > 0 ns, got {self.time_step!r}")
        if self.ramp < 0.0 or self.padding < 0.0:
            raise ConfigError("ramp", "ramp and padding must be >= 0 ns")
        if self.hold < self.ramp:
            raise PulseDomainError(f"hold ({self.hold} ns) must be >= ramp ({self.ramp} ns)")
        if self.hold <= 0.0:
            raise PulseDomainError("hold must be > 0 ns")

    @property
    def total_duration(self) -> float:
        return self.hold + self.ramp + 2.0 * self.padding

    @property
    def direction(self) -> float:
        """+1 si la interacción está por encima del aparcamiento (o coincide), −1 si no."""
        return -1.0 if self.interaction_frequency < self.parking_frequency else 1.0

    @property
    def target_frequency(self) -> float:
        """Frecuencia de meseta: interacción + overshoot, alejándose del aparcamiento."""
        return self.interaction_frequency + self.direction * self.overshoot * 1e-3


def _shape(pulse: PulseSpec, t: np.ndarray) -> np.ndarray:
    x = np.asarray(t, dtype=float) - pulse.padding
    ramp, hold = pulse.ramp, pulse.hold
    s = np.zeros_like(x)
    plateau = (x >= ramp) & (x <= hold)
    s[plateau] = 1.0
    if ramp > 0.0:
        rise = (x > 0.0) & (x < ramp)
        fall = (x > hold) & (x < hold + ramp)
        s[rise] = 0.5 * (1.0 - np.cos(np.pi * x[rise] / ramp))
        s[fall] = 0.5 * (1.0 + np.cos(np.pi * (x[fall] - hold) / ramp))
    else:
        s[(x >= 0.0) & (x <= hold)] = 1.0
    return s


def frequencies_at(pulse: PulseSpec, t: np.ndarray) -> np.ndarray:
    """Versión vectorizada de frequency_at (sin comprobación de dominio)."""
    return pulse.parking_frequency + (pulse.target_frequency - pulse.parking_frequency) * _shape(pulse, t)


def frequency_at(pulse: PulseSpec, t: float) -> float:
    """
    Frecuencia del modo a (GHz) en el instante t (ns).

    Errores
    -------
    PulseDomainError si t ∉ [0, total_duration].
    """
    if not (-_DOMAIN_TOL <= t <= pulse.total_duration + _DOMAIN_TOL):
        raise PulseDomainError(f"t = {t!r} ns outside [0, {pulse.total_duration}]")
    return float(frequencies_at(pulse, np.array([t]))[0])


# ---------------------------------------------------------------------------
# Muestreo
# ---------------------------------------------------------------------------


def time_grid(pulse: PulseSpec) -> np.ndarray:
    """
    Rejilla uniforme con ambos extremos incluidos.

    El número de pasos es ceil(T/dt); el paso efectivo T/n puede ser
    ligeramente menor que time_step cuando T no es múltiplo exacto.
    """
    n_steps = max(1, math.ceil(pulse.total_duration / pulse.time_step - 1e-9))
    return np.linspace(0.0, pulse.total_duration, n_steps + 1)


@dataclass(frozen=True)
class PulseSamples:
    times: np.ndarray
    frequencies: np.ndarray

    def __len__(self) -> int:
        return len(self.times)

    def __iter__(self) -> Iterator[tuple[float, float]]:
        return ((float(t), float(f)) for t, f in zip(self.times, self.frequencies))

    @property
    def time_step_used(self) -> float:
        return float(self.times[1] - self.times[0]) if len(self.times) > 1 else 0.0


def sample_pulse(pulse: PulseSpec) -> PulseSamples:
    times = time_grid(pulse)
    return PulseSamples(times=times, frequencies=frequencies_at(pulse, times))


def measured_fwhm(samples: PulseSamples, parking_frequency: float) -> float:
    """
    Anchura a media altura medida sobre las muestras (interpolación lineal
    de los dos cruces con la mitad de la excursión máxima).
    """
    excursion = np.abs(samples.frequencies - parking_frequency)
    peak = float(excursion.max())
    if peak == 0.0:
        return 0.0
    half = 0.5 * peak
    above = np.flatnonzero(excursion >= half)
    first, last = int(above[0]), int(above[-1])

    def crossing(i_below: int, i_above: int) -> float:
        t0, t1 = samples.times[i_below], samples.times[i_above]
        e0, e1 = excursion[i_below], excursion[i_above]
        return float(t0 + (half - e0) * (t1 - t0) / (e1 - e0))

    t_rise = samples.times[first] if first == 0 else crossing(first - 1, first)
    t_fall = samples.times[last] if last == len(excursion) - 1 else crossing(last + 1, last)
    return float(t_fall - t_rise)


def pulse_table(pulse: PulseSpec) -> Table:
    """Muestras como tabla (t_ns, freq_ghz) para la tarea pulse-dump."""
    samples = sample_pulse(pulse)
    table = Table(columns=["t_ns", "freq_ghz"])
    table.extend({"t_ns": t, "freq_ghz": f} for t, f in samples)
    return table
