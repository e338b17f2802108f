"""
Tests de zzsim.gates: familia U(θ, φ), extracción de ángulos, fidelidad,
virtual-Z y simulación de puertas.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from zzsim.errors import BranchError, ConfigError
from zzsim.gates import (
    GateKind,
    average_fidelity,
    canonicalize_virtual_z,
    default_pulse,
    extract_angles,
    parse_gate_kind,
    simulate_gate,
    target_unitary,
    virtual_z,
    wrap_angle,
)
from zzsim.gates.simulate import GateMetrics
from zzsim.gates.targets import two_excitation_resonances


def test_wrap_angle_range():
    assert wrap_angle(math.pi) == pytest.approx(math.pi)
    assert wrap_angle(-math.pi) == pytest.approx(math.pi)
    assert wrap_angle(3.0 * math.pi / 2.0) == pytest.approx(-math.pi / 2.0)
    assert wrap_angle(0.0) == 0.0


@pytest.mark.parametrize("theta,phi", [(0.0, math.pi), (0.3, 1.1), (0.1, -2.0)])
def test_diagonal_branch_recovers_angles(theta, phi):
    """Los ángulos extraídos no cambian con virtual-Z ni con una fase global."""
    U = np.exp(0.7j) * virtual_z(0.4, -1.3) @ target_unitary(theta, phi)
    t, p = extract_angles(U, "diagonal")
    assert t == pytest.approx(theta, abs=1e-12)
    assert wrap_angle(p - phi) == pytest.approx(0.0, abs=1e-12)


def test_swap_branch_recovers_iswap():
    """U(π/2, 0) en la rama swap: φ = 0 − (−π) − π = 0."""
    theta, phi = extract_angles(target_unitary(math.pi / 2.0, 0.0), "swap")
    assert theta == pytest.approx(math.pi / 2.0)
    assert phi == pytest.approx(0.0, abs=1e-12)
    t, p = extract_angles(virtual_z(1.0, 0.2) @ target_unitary(1.2, 0.5), "swap")
    assert (t, p) == pytest.approx((1.2, 0.5))


def test_wrong_branch_raises():
    with pytest.raises(BranchError, match="swap"):
        extract_angles(target_unitary(math.pi / 2.0, 0.0), "diagonal")
    with pytest.raises(BranchError, match="diagonal"):
        extract_angles(target_unitary(0.0, math.pi), "swap")


def test_average_fidelity_arithmetic():
    """F(T, T) = 1; F(I, CZ) = (4 + |Tr CZ|²)/20 = 0.4; la fuga penaliza vía Tr(P†P)."""
    cz = target_unitary(0.0, math.pi)
    assert average_fidelity(cz, cz) == pytest.approx(1.0)
    assert average_fidelity(np.eye(4), cz) == pytest.approx(0.4)
    leaky = cz.copy()
    leaky[3, 3] *= math.sqrt(0.9)
    assert average_fidelity(leaky, cz) < 1.0


def test_virtual_z_canonicalization_removes_local_phases():
    cz = target_unitary(0.0, math.pi)
    actual = virtual_z(0.4, -1.2).conj() @ cz
    canonical, (phi_a, phi_b) = canonicalize_virtual_z(actual, cz)
    assert average_fidelity(canonical, cz) == pytest.approx(1.0, abs=1e-12)
    assert (phi_a, phi_b) == pytest.approx((0.4, -1.2), abs=1e-8)
    print(f"[SUMMARY] test_virtual_z_canonicalization_removes_local_phases: ({phi_a:.6f}, {phi_b:.6f})")


def test_gate_kinds():
    assert GateKind.cz().ideal == (0.0, math.pi)
    assert GateKind.iswap().branch == "swap"
    assert GateKind.xy(0.2).branch == "diagonal"
    assert GateKind.xy(1.0).branch == "swap"
    assert GateKind.cphase(1.0).label == "CPhase(1)"
    assert parse_gate_kind("CZ") == GateKind.cz()
    with pytest.raises(ConfigError):
        parse_gate_kind("xy")
    with pytest.raises(ConfigError):
        parse_gate_kind("cnot")


def test_interaction_frequencies(ab_device):
    assert GateKind.cz().interaction_frequency(ab_device) == pytest.approx(5.75)
    assert GateKind.iswap().interaction_frequency(ab_device) == pytest.approx(5.5)


def test_swap_gates_park_on_the_far_side_of_a_crossing(ab_device, aa_device):
    """
    6.1 -> 5.5 GHz cruzaría el punto triple (5.75 GHz): iSWAP y XY aparcan en
    4.9 GHz; CZ conserva el aparcamiento del dispositivo.
    """
    assert two_excitation_resonances(ab_device) == pytest.approx((5.75, 5.75))
    assert GateKind.iswap().default_parking(ab_device) == pytest.approx(4.9)
    assert GateKind.xy(1.0).default_parking(ab_device) == pytest.approx(4.9)
    assert GateKind.cz().default_parking(ab_device) == pytest.approx(6.1)
    assert default_pulse(ab_device, GateKind.iswap(), hold=17.1).parking_frequency == pytest.approx(4.9)
    # sin cruce (AA, Δ = −150 MHz) no se toca
    assert GateKind.iswap().default_parking(aa_device) == pytest.approx(5.35)
    # el aparcamiento explícito siempre gana
    assert default_pulse(ab_device, GateKind.iswap(), hold=17.1, parking_frequency=6.1).parking_frequency == 6.1


def test_error_budget_and_dominant_channel():
    metrics = GateMetrics(
        fidelity=0.99,
        epsilon_leak=1e-4,
        epsilon_swap=0.0,
        theta_measured=0.0,
        phi_measured=math.pi - 0.1,
        delta_theta=0.0,
        delta_phi=-0.1,
        virtual_z=(0.0, 0.0),
        gate_kind=GateKind.cz(),
    )
    budget = metrics.error_budget()
    assert budget["swap_angle"] == pytest.approx(0.0)
    assert budget["conditional_phase"] == pytest.approx(0.3 * (1.0 - math.cos(0.1)))
    assert metrics.dominant_error() == "conditional_phase"
    row = metrics.to_row()
    assert row["gate"] == "CZ"
    assert row["d_phi"] == -0.1


def test_simulated_cz_is_close_to_target(ab_device):
    """Pulso CZ sin calibrar en el punto triple: fidelidad alta y φ ≈ π."""
    kind = GateKind.cz()
    pulse = default_pulse(ab_device, kind, hold=16.7, time_step=0.01, padding=0.5)
    metrics = simulate_gate(ab_device, pulse, kind)
    assert metrics.fidelity > 0.95
    assert metrics.epsilon_leak < 0.05
    assert abs(metrics.delta_phi) < 0.3
    assert abs(metrics.delta_theta) < 0.1
    print(
        f"[SUMMARY] test_simulated_cz_is_close_to_target: F = {metrics.fidelity:.6f}, "
        f"eps_leak = {metrics.epsilon_leak:.2e}"
    )


def test_idle_pulse_is_identity_up_to_virtual_z(uncoupled_device):
    """Sin acoplo, cualquier pulso es diagonal: fidelidad 1 frente a U(0, 0)."""
    kind = GateKind.cphase(0.0)
    pulse = default_pulse(uncoupled_device, kind, hold=10.0, time_step=0.05)
    metrics = simulate_gate(uncoupled_device, pulse, kind)
    assert metrics.fidelity == pytest.approx(1.0, abs=1e-9)
    assert metrics.epsilon_leak == pytest.approx(0.0, abs=1e-12)
    assert metrics.delta_phi == pytest.approx(0.0, abs=1e-9)


def test_angle_round_trip_over_random_gates():
    """1000 pares (θ, φ) con Z virtuales y fase global: error < 1e−9 en su rama."""
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(1000):
        theta = rng.uniform(0.01, math.pi / 2.0 - 0.01)
        phi = rng.uniform(-math.pi, math.pi)
        branch = "diagonal" if theta < math.pi / 4.0 else "swap"
        local = virtual_z(*rng.uniform(-math.pi, math.pi, 2))
        U = np.exp(1j * rng.uniform(-math.pi, math.pi)) * local @ target_unitary(theta, phi)
        t, p = extract_angles(U, branch)
        worst = max(worst, abs(t - theta), abs(wrap_angle(p - phi)))
    assert worst < 1e-9
    print(f"[SUMMARY] test_angle_round_trip_over_random_gates: max error = {worst:.2e}")


def test_canonicalization_never_lowers_fidelity():
    """100 matrices con fuga (bloque 4×4 de un unitario 6×6 aleatorio)."""
    rng = np.random.default_rng(11)
    targets = [GateKind.cz().target(), GateKind.iswap().target()]
    gains = []
    for k in range(100):
        z = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        q, _ = np.linalg.qr(z)
        target = targets[k % 2]
        # cerca del objetivo para que la búsqueda tenga algo que mejorar
        P = 0.8 * (virtual_z(*rng.uniform(-math.pi, math.pi, 2)) @ target) + 0.2 * q[:4, :4]
        before = average_fidelity(P, target)
        canonical, _ = canonicalize_virtual_z(P, target)
        after = average_fidelity(canonical, target)
        assert after >= before - 1e-12
        gains.append(after - before)
    print(f"[SUMMARY] test_canonicalization_never_lowers_fidelity: mean gain = {np.mean(gains):.3e}")
