"""
zzsim.spectrum.zz

Tres evaluadores independientes de la interacción ZZ, en MHz con signo:

- numeric      : ζ = (E~11 − E~01) − (E~10 − E~00) a partir del espectro etiquetado.
- analytic     : ζ = J·(tan(θ_b/2) − tan(θ_a/2)),
                 tan θ_a = 2J/(Δ + α_a), tan θ_b = 2J/(Δ − α_b), J = √2·g.
- perturbative : ζ ≈ J²/(Δ − α_b) − J²/(Δ + α_a).

Las dos formas cerradas solo existen para acoplo directo. Sus polos son
las resonancias de dos excitaciones |11⟩↔|02⟩ (Δ = α_b) y |11⟩↔|20⟩
(Δ = −α_a).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from zzsim.errors import ConfigError, PoleError
from zzsim.model.device import DeviceSpec, DirectCoupling

from .labeling import LabeledSpectrum, device_spectrum

ZZMethod = Literal["numeric", "analytic", "perturbative"]

POLE_TOL_MHZ = 1e-3


@dataclass(frozen=True)
class ZZResult:
    zeta: float  # MHz, con signo
    method: ZZMethod
    degenerate_flag: bool = False


@dataclass(frozen=True)
class ZZContrast:
    """ζ en reposo y en el punto de interacción, y el cociente |ζ_on|/|ζ_off|."""

    zeta_off: float
    zeta_on: float
    ratio: float


def zeta_from_spectrum(spectrum: LabeledSpectrum) -> float:
    """ζ en MHz a partir de las energías etiquetadas (GHz)."""
    pad = (0,) * (len(spectrum.dims) - 2)
    e = {lbl[:2]: spectrum.energy(lbl) for lbl in ((0, 0) + pad, (0, 1) + pad, (1, 0) + pad, (1, 1) + pad)}
    return ((e[(1, 1)] - e[(0, 1)]) - (e[(1, 0)] - e[(0, 0)])) * 1e3


def zz_numeric(device: DeviceSpec) -> ZZResult:
    """
    ζ por diagonalización exacta del Hamiltoniano completo.

    degenerate_flag se activa si alguna etiqueta computacional (en la
    práctica ~11 en el punto triple) se resolvió por desempate.
    """
    spectrum = device_spectrum(device)
    return ZZResult(
        zeta=zeta_from_spectrum(spectrum),
        method="numeric",
        degenerate_flag=spectrum.computational_tie_resolved(),
    )


def _check_poles(delta: float, alpha_a: float, alpha_b: float) -> tuple[float, float]:
    den_a = delta + alpha_a
    den_b = delta - alpha_b
    if abs(den_a) < POLE_TOL_MHZ:
        raise PoleError(f"Too close to the |11>-|20> pole: Δ + α_a = {den_a!r} MHz")
    if abs(den_b) < POLE_TOL_MHZ:
        raise PoleError(f"Too close to the |11>-|02> pole: Δ − α_b = {den_b!r} MHz")
    return den_a, den_b


def _tan_half(tan_theta: float) -> float:
    # rama θ ∈ (−π/2, π/2)
    return tan_theta / (1.0 + math.sqrt(1.0 + tan_theta * tan_theta))


def zz_analytic(delta: float, alpha_a: float, alpha_b: float, g: float) -> ZZResult:
    """Forma cerrada de dos niveles por cruce. Todas las magnitudes en MHz."""
    den_a, den_b = _check_poles(delta, alpha_a, alpha_b)
    J = math.sqrt(2.0) * g
    zeta = J * (_tan_half(2.0 * J / den_b) - _tan_half(2.0 * J / den_a))
    return ZZResult(zeta=zeta, method="analytic")


def zz_perturbative(delta: float, alpha_a: float, alpha_b: float, g: float) -> ZZResult:
    den_a, den_b = _check_poles(delta, alpha_a, alpha_b)
    J2 = 2.0 * g * g
    return ZZResult(zeta=J2 / den_b - J2 / den_a, method="perturbative")


def closed_form_inputs(device: DeviceSpec) -> tuple[float, float, float, float]:
    """(Δ, α_a, α_b, g) en MHz para un dispositivo de acoplo directo."""
    if not isinstance(device.coupling, DirectCoupling):
        raise ConfigError("device.coupling.kind", "closed-form ZZ requires direct coupling")
    return (
        device.detuning_mhz,
        device.mode_a.anharmonicity,
        device.mode_b.anharmonicity,
        device.coupling.g,
    )


def zz_on_off(device: DeviceSpec, off_freq_a_ghz: float, on_freq_a_ghz: float) -> ZZContrast:
    """Contraste on/off de ζ entre el punto de reposo y el de interacción del modo a."""
    zeta_off = zz_numeric(device.with_frequency_a(off_freq_a_ghz)).zeta
    zeta_on = zz_numeric(device.with_frequency_a(on_freq_a_ghz)).zeta
    ratio = math.inf if zeta_off == 0.0 else abs(zeta_on) / abs(zeta_off)
    return ZZContrast(zeta_off=zeta_off, zeta_on=zeta_on, ratio=ratio)
