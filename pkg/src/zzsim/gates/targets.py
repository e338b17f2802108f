"""
zzsim.gates.targets

Familia de puertas U(θ, φ) y tipos de puerta soportados.

Orden lógico: |00⟩, |01⟩, |10⟩, |11⟩ (qubit a el más significativo).

    U(θ, φ) = exp(−iθ(|01⟩⟨10| + |10⟩⟨01|)) · exp(−iφ|11⟩⟨11|)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from zzsim.errors import ConfigError
from zzsim.model.device import DeviceSpec
from zzsim.utils.logger import global_log

GateName = Literal["cz", "iswap", "xy", "cphase"]
GATE_NAMES = ("cz", "iswap", "xy", "cphase")
Branch = Literal["diagonal", "swap"]


def target_unitary(theta: float, phi: float) -> np.ndarray:
    U = np.zeros((4, 4), dtype=complex)
    U[0, 0] = 1.0
    U[1, 1] = U[2, 2] = math.cos(theta)
    U[1, 2] = U[2, 1] = -1j * math.sin(theta)
    U[3, 3] = np.exp(-1j * phi)
    return U


@dataclass(frozen=True)
class GateKind:
    """
    Tipo de puerta con sus ángulos ideales.

    cz     : (0, π), rama diagonal, interacción en ν_b + α_b (|11⟩ ↔ |02⟩)
    iswap  : (π/2, 0), rama swap, interacción en ν_b (|01⟩ ↔ |10⟩)
    xy     : (θ, 0), rama swap si θ ≥ π/4 y diagonal si no, interacción en ν_b
    cphase : (0, φ), rama diagonal, interacción en ν_b + α_b
    """

    name: GateName
    angle: float = 0.0

    def __post_init__(self) -> None:
        if self.name not in GATE_NAMES:
            raise ConfigError("gate.kind", f"unknown gate kind {self.name!r}")
        if not math.isfinite(self.angle):
            raise ConfigError("gate.kind", "gate angle must be finite")

    @classmethod
    def cz(cls) -> "GateKind":
        return cls("cz")

    @classmethod
    def iswap(cls) -> "GateKind":
        return cls("iswap")

    @classmethod
    def xy(cls, theta: float) -> "GateKind":
        return cls("xy", float(theta))

    @classmethod
    def cphase(cls, phi: float) -> "GateKind":
        return cls("cphase", float(phi))

    @property
    def ideal(self) -> tuple[float, float]:
        if self.name == "cz":
            return 0.0, math.pi
        if self.name == "iswap":
            return math.pi / 2.0, 0.0
        if self.name == "xy":
            return self.angle, 0.0
        return 0.0, self.angle

    @property
    def branch(self) -> Branch:
        if self.name == "iswap":
            return "swap"
        if self.name == "xy":
            return "swap" if self.angle >= math.pi / 4.0 else "diagonal"
        return "diagonal"

    @property
    def label(self) -> str:
        if self.name == "cz":
            return "CZ"
        if self.name == "iswap":
            return "iSWAP"
        if self.name == "xy":
            return f"XY({self.angle:.6g})"
        return f"CPhase({self.angle:.6g})"

    def target(self) -> np.ndarray:
        return target_unitary(*self.ideal)

    def interaction_frequency(self, device: DeviceSpec) -> float:
        """Frecuencia de interacción nominal ν_I del modo a (GHz)."""
        if self.name in ("cz", "cphase"):
            return device.mode_b.frequency + device.mode_b.anharmonicity * 1e-3
        return device.mode_b.frequency

    def default_parking(self, device: DeviceSpec, interaction_frequency: float | None = None) -> float:
        """
        Aparcamiento por defecto del modo a (GHz).

        Es la frecuencia del dispositivo, salvo en las puertas de intercambio
        (interacción en ν_b) cuya excursión cruzaría una resonancia de |11⟩
        con |20⟩ o |02⟩: en ese caso el aparcamiento se refleja respecto a
        ν_I, al otro lado de ν_b. Si el reflejo también cruza una resonancia
        (o no es positivo) se mantiene la frecuencia del dispositivo.
        """
        parking = device.mode_a.frequency
        if self.name not in ("iswap", "xy"):
            return parking
        nu_i = self.interaction_frequency(device) if interaction_frequency is None else float(interaction_frequency)
        resonances = two_excitation_resonances(device)
        if not _crosses(parking, nu_i, resonances):
            return parking
        mirrored = 2.0 * nu_i - parking
        if mirrored <= 0.0 or _crosses(mirrored, nu_i, resonances):
            return parking
        global_log("debug", "parking_mirrored", gate=self.label, device_ghz=parking, parking_ghz=mirrored)
        return mirrored


def two_excitation_resonances(device: DeviceSpec) -> tuple[float, float]:
    """Frecuencias del modo a (GHz) donde |11⟩ es degenerado con |20⟩ y con |02⟩."""
    nu_b = device.mode_b.frequency
    return nu_b - device.mode_a.anharmonicity * 1e-3, nu_b + device.mode_b.anharmonicity * 1e-3


def _crosses(start: float, stop: float, points: tuple[float, ...]) -> bool:
    lo, hi = min(start, stop), max(start, stop)
    return any(lo < p < hi for p in points)


def parse_gate_kind(name: str, theta: float | None = None, phi: float | None = None) -> GateKind:
    """Construye un GateKind desde la configuración ("cz", "iswap", "xy", "cphase")."""
    key = str(name).lower()
    if key == "xy":
        if theta is None:
            raise ConfigError("gate.theta_rad", "required for kind 'xy'")
        return GateKind.xy(theta)
    if key == "cphase":
        if phi is None:
            raise ConfigError("gate.phi_rad", "required for kind 'cphase'")
        return GateKind.cphase(phi)
    if key in ("cz", "iswap"):
        return GateKind(key)  # type: ignore[arg-type]
    raise ConfigError("gate.kind", f"unknown gate kind {name!r}; expected one of {GATE_NAMES}")
