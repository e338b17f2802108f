"""
zzsim.gates.simulate

Simulación completa de una puerta:

    propagate → project_logical → canonicalize_virtual_z
              → average_fidelity → extract_angles

Convenciones de error (poblaciones en el marco lógico):
- ε_leak = 1 − P_‾11 partiendo de ‾11
- ε_swap = |P_‾01 − cos²θ_ideal| partiendo de ‾01
  (1 − P_‾01 para CZ, P_‾01 para iSWAP)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from zzsim.errors import BranchError
from zzsim.dynamics.frame import LogicalFrame, logical_frame, project_logical
from zzsim.dynamics.propagator import StepperName, propagate
from zzsim.model.device import DeviceSpec
from zzsim.pulse.flat_top import DEFAULT_PADDING_NS, DEFAULT_RAMP_NS, DEFAULT_TIME_STEP_NS, PulseSpec
from zzsim.utils.logger import global_log

from .angles import extract_angles, wrap_angle
from .fidelity import average_fidelity, canonicalize_virtual_z
from .targets import GateKind

METRIC_COLUMNS = [
    "gate",
    "fidelity",
    "eps_leak",
    "eps_swap",
    "theta",
    "phi",
    "d_theta",
    "d_phi",
    "vz_a",
    "vz_b",
]

ERROR_CHANNELS = ("leakage", "swap_angle", "conditional_phase")


def _clip_unit(x: float) -> float:
    return min(1.0, max(0.0, float(x)))


@dataclass(frozen=True)
class GateMetrics:
    fidelity: float
    epsilon_leak: float
    epsilon_swap: float
    theta_measured: float
    phi_measured: float
    delta_theta: float
    delta_phi: float
    virtual_z: tuple[float, float]
    gate_kind: GateKind

    def error_budget(self) -> dict[str, float]:
        """
        Contribución aproximada de cada canal a 1 − F.

        swap_angle y conditional_phase son la infidelidad de U(θ, φ)
        desplazada solo en δθ o solo en δφ respecto al ideal.
        """
        c = math.cos(self.delta_theta)
        return {
            "leakage": self.epsilon_leak,
            "swap_angle": (4.0 - (1.0 + c) ** 2) / 5.0,
            "conditional_phase": 0.3 * (1.0 - math.cos(self.delta_phi)),
        }

    def dominant_error(self) -> str:
        budget = self.error_budget()
        return max(ERROR_CHANNELS, key=lambda name: budget[name])

    def to_row(self) -> dict:
        return {
            "gate": self.gate_kind.label,
            "fidelity": self.fidelity,
            "eps_leak": self.epsilon_leak,
            "eps_swap": self.epsilon_swap,
            "theta": self.theta_measured,
            "phi": self.phi_measured,
            "d_theta": self.delta_theta,
            "d_phi": self.delta_phi,
            "vz_a": self.virtual_z[0],
            "vz_b": self.virtual_z[1],
        }


def default_pulse(
    device: DeviceSpec,
    kind: GateKind,
    hold: float,
    overshoot: float = 0.0,
    parking_frequency: Optional[float] = None,
    ramp: float = DEFAULT_RAMP_NS,
    time_step: float = DEFAULT_TIME_STEP_NS,
    padding: float = DEFAULT_PADDING_NS,
) -> PulseSpec:
    """
    Pulso con la frecuencia de interacción nominal del tipo de puerta.

    Sin aparcamiento explícito se usa GateKind.default_parking.
    """
    return PulseSpec(
        parking_frequency=kind.default_parking(device) if parking_frequency is None else parking_frequency,
        interaction_frequency=kind.interaction_frequency(device),
        hold=hold,
        overshoot=overshoot,
        ramp=ramp,
        time_step=time_step,
        padding=padding,
    )


def _angles(canonical: np.ndarray, kind: GateKind) -> tuple[float, float]:
    try:
        return extract_angles(canonical, kind.branch)
    except BranchError:
        # Puertas muy descalibradas: la otra rama sigue dando ángulos útiles.
        other = "diagonal" if kind.branch == "swap" else "swap"
        global_log("debug", "angle_branch_fallback", gate=kind.label, branch=other)
        return extract_angles(canonical, other)


def simulate_gate(
    device: DeviceSpec,
    pulse: PulseSpec,
    kind: GateKind,
    scheme: StepperName = "midpoint",
    frame: Optional[LogicalFrame] = None,
) -> GateMetrics:
    """
    Errores
    -------
    StepSizeError / FrameError del propagador o del marco lógico.
    """
    if frame is None:
        frame = logical_frame(device, pulse.parking_frequency)
    U = propagate(device, pulse, scheme=scheme)
    P = project_logical(U, frame).matrix

    target = kind.target()
    canonical, vz = canonicalize_virtual_z(P, target)
    fidelity = average_fidelity(canonical, target)
    theta, phi = _angles(canonical, kind)
    theta_ideal, phi_ideal = kind.ideal

    p11 = abs(P[3, 3]) ** 2
    p01 = abs(P[1, 1]) ** 2
    metrics = GateMetrics(
        fidelity=float(fidelity),
        epsilon_leak=_clip_unit(1.0 - p11),
        epsilon_swap=_clip_unit(abs(p01 - math.cos(theta_ideal) ** 2)),
        theta_measured=theta,
        phi_measured=phi,
        delta_theta=wrap_angle(theta - theta_ideal),
        delta_phi=wrap_angle(phi - phi_ideal),
        virtual_z=vz,
        gate_kind=kind,
    )
    global_log(
        "debug",
        "gate_simulated",
        gate=kind.label,
        hold_ns=pulse.hold,
        overshoot_mhz=pulse.overshoot,
        fidelity=metrics.fidelity,
        eps_leak=metrics.epsilon_leak,
    )
    return metrics
