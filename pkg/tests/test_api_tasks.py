"""
Tests de zzsim.api.tasks: cada tarea devuelve una tabla con el esquema
esperado y un resumen de una línea.

Las tareas de calibración se prueban con el calibrador sustituido.
"""

from __future__ import annotations

import pytest

from zzsim.api.tasks import run_from_mapping
from zzsim.optimize.calibration import CalibrationResult
from zzsim.utils.table import Table
from zzsim.gates.simulate import GateMetrics
from zzsim.gates import GateKind

AB_DEVICE = {
    "mode_a": {"freq_ghz": 6.1, "anharm_mhz": -250},
    "mode_b": {"freq_ghz": 5.5, "anharm_mhz": 250},
    "coupling": {"kind": "direct", "g_mhz": 15},
}


def test_zz_task_at_triple_point_is_flagged():
    device = {**AB_DEVICE, "mode_a": {"freq_ghz": 5.75, "anharm_mhz": -250}}
    result = run_from_mapping({"device": device}, "zz")
    zeta = float(result.summary.split("=")[1].split()[0])
    assert zeta == pytest.approx(-30.0, abs=0.1)
    assert result.summary.endswith("(degenerate)")
    assert result.table.rows[0]["degenerate_flag"] is True


def test_zz_task_with_on_off_contrast():
    result = run_from_mapping({"device": AB_DEVICE, "zz": {"on_freq_a_ghz": 5.75}}, "zz")
    assert result.summary.startswith("zeta = 0.000 MHz")
    assert result.table.columns[-2:] == ["zeta_on_mhz", "on_off_ratio"]
    assert abs(result.table.rows[0]["zeta_on_mhz"]) == pytest.approx(30.0, abs=0.1)


def test_spectrum_task():
    cfg = {
        "device": AB_DEVICE,
        "sweep": {"axes": [{"parameter": "delta_mhz", "start": 200, "stop": 300, "points": 3}]},
    }
    result = run_from_mapping(cfg, "spectrum")
    assert len(result.table) == 3
    assert result.summary == "spectrum: 3 points x 9 levels"


def test_pulse_dump_task():
    cfg = {"device": AB_DEVICE, "pulse": {"hold_ns": 16.5, "padding_ns": 0.5}}
    result = run_from_mapping(cfg, "pulse-dump")
    assert result.table.columns == ["t_ns", "freq_ghz"]
    assert len(result.table) == 2001
    assert "target = 5.750000 GHz" in result.summary


def test_population_dump_task():
    cfg = {
        "device": AB_DEVICE,
        "pulse": {"hold_ns": 16.5, "padding_ns": 0.5, "time_step_ns": 0.05},
        "population": {"initial": "11", "stride": 20},
    }
    result = run_from_mapping(cfg, "population-dump")
    assert len(result.table) == 21
    assert result.summary.startswith("population-dump from 11: final p11 = ")


def test_gate_task():
    cfg = {
        "device": AB_DEVICE,
        "gate": {"kind": "cz"},
        "pulse": {"hold_ns": 16.7, "padding_ns": 0.5, "time_step_ns": 0.02},
    }
    result = run_from_mapping(cfg, "gate")
    row = result.table.rows[0]
    assert row["gate"] == "CZ"
    assert row["hold_ns"] == 16.7
    assert 0.0 <= row["eps_leak"] <= 1.0
    assert result.summary.startswith("gate CZ: F = ")


def _fake_calibration(*args, **kwargs):
    metrics = GateMetrics(0.9999, 5e-5, 1e-5, 0.0, 3.14, 0.0, -0.001, (0.1, 0.2), GateKind.cz())
    return CalibrationResult(best_hold=17.3, best_overshoot=1.25, objective_value=5e-5, metrics_at_optimum=metrics)


def test_calibrate_task_single_row(monkeypatch):
    monkeypatch.setattr("zzsim.api.tasks.calibrate_gate", _fake_calibration)
    result = run_from_mapping({"device": AB_DEVICE, "gate": {"kind": "cz"}}, "calibrate")
    assert len(result.table) == 1
    row = result.table.rows[0]
    assert row["hold_ns"] == 17.3
    assert row["objective"] == "leakage"
    assert result.summary.startswith("calibrate CZ: hold = 17.3 ns, overshoot = 1.25 MHz")


def test_hold_scan_task_reports_both_optima(monkeypatch):
    table = Table(columns=["hold_ns", "overshoot_mhz", "fidelity", "eps_leak", "eps_swap"])
    table.append({"hold_ns": 16.0, "overshoot_mhz": 0.0, "fidelity": 0.99, "eps_leak": 1e-3, "eps_swap": 1e-5})
    table.append({"hold_ns": 17.0, "overshoot_mhz": 0.0, "fidelity": 0.99, "eps_leak": 1e-5, "eps_swap": 1e-3})
    monkeypatch.setattr("zzsim.api.tasks.hold_scan", lambda *a, **k: table)
    cfg = {"device": AB_DEVICE, "gate": {"kind": "cz"}, "hold_scan": {"start_ns": 16.0, "stop_ns": 17.0, "step_ns": 1.0}}
    result = run_from_mapping(cfg, "hold-scan")
    assert result.summary == "hold-scan CZ: leakage-optimal hold = 17.0 ns, swap-optimal hold = 16.0 ns"
