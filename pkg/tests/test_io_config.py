"""
Tests de la carga y validación estricta de la configuración JSON.
"""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from zzsim.errors import ConfigError
from zzsim.gates import GateKind
from zzsim.io import load_device, load_run_config, read_config_file
from zzsim.io.run_config import TASKS
from zzsim.model import ResonatorCoupling

DEVICE = {
    "mode_a": {"freq_ghz": 6.1, "anharm_mhz": -250},
    "mode_b": {"freq_ghz": 5.5, "anharm_mhz": 250},
    "coupling": {"kind": "direct", "g_mhz": 15},
}


def _config(**sections):
    cfg = {"device": json.loads(json.dumps(DEVICE))}
    cfg.update(sections)
    return cfg


def test_load_direct_device():
    device = load_device(DEVICE)
    assert device.mode_a.frequency == 6.1
    assert device.mode_b.anharmonicity == 250.0
    assert device.coupling.g == 15.0
    assert device.dims == (3, 3)


def test_resonator_defaults_apply():
    cfg = dict(DEVICE, coupling={"kind": "resonator"})
    device = load_device(cfg)
    assert isinstance(device.coupling, ResonatorCoupling)
    assert device.coupling.resonator_frequency == 6.5
    assert device.dims == (3, 3, 3)


@pytest.mark.parametrize(
    "mutate,key_path",
    [
        (lambda c: c["device"]["mode_a"].pop("freq_ghz"), "device.mode_a.freq_ghz"),
        (lambda c: c["device"]["coupling"].update(g_mhz="15"), "device.coupling.g_mhz"),
        (lambda c: c["device"]["mode_b"].update(levels=2), "device.mode_b.levels"),
        (lambda c: c["device"].update(extra=1), "device.extra"),
        (lambda c: c.update(plots={}), "plots"),
        (lambda c: c["device"]["coupling"].update(kind="inductive"), "device.coupling.kind"),
    ],
)
def test_errors_name_the_offending_key(mutate, key_path):
    cfg = _config()
    mutate(cfg)
    with pytest.raises(ConfigError) as excinfo:
        load_run_config(cfg, "zz")
    assert excinfo.value.key_path == key_path
    assert str(excinfo.value).startswith(key_path)


def test_task_resolution():
    assert load_run_config(_config(task="zz")).task == "zz"
    with pytest.raises(ConfigError) as excinfo:
        load_run_config(_config())
    assert excinfo.value.key_path == "task"
    with pytest.raises(ConfigError):
        load_run_config(_config(task="zz"), "gate")


def test_task_sections_are_required():
    with pytest.raises(ConfigError) as excinfo:
        load_run_config(_config(), "zz-sweep")
    assert excinfo.value.key_path == "sweep"
    with pytest.raises(ConfigError) as excinfo:
        load_run_config(_config(gate={"kind": "cz"}, pulse={}), "gate")
    assert excinfo.value.key_path == "pulse.hold_ns"


def test_full_gate_config():
    cfg = _config(
        gate={"kind": "xy", "theta_rad": 0.5},
        pulse={"hold_ns": 17.3, "overshoot_mhz": 2.0, "time_step_ns": 0.02},
        execution={"threads": 2, "scheme": "magnus4"},
        logging={"log_level": "debug", "log_json": True},
        output={"path": "out.parquet", "format": "parquet"},
    )
    run = load_run_config(cfg, "gate")
    assert run.gate == GateKind.xy(0.5)
    pulse = run.pulse.build(run.device, run.gate)
    # 6.1 -> 5.5 GHz cruza 5.75 GHz: XY aparca al otro lado
    assert pulse.parking_frequency == pytest.approx(4.9)
    assert pulse.interaction_frequency == 5.5
    assert pulse.time_step == 0.02
    assert run.threads == 2 and run.scheme == "magnus4"
    assert run.logging == {"log_level": "debug", "log_json": True}
    assert run.output.format == "parquet"


def test_sweep_and_hold_scan_sections():
    cfg = _config(
        sweep={"axes": [{"parameter": "delta_mhz", "start": -400, "stop": 400, "points": 5}]},
        gate={"kind": "cz"},
        hold_scan={"start_ns": 16.0, "stop_ns": 16.2},
    )
    run = load_run_config(cfg, "hold-scan")
    assert run.sweep.axes[0].points == 5
    assert run.holds == (16.0, 16.1, 16.2)

    bad = _config(sweep={"axes": [{"parameter": "delta_mhz", "start": 0, "stop": 1, "points": 0}]})
    with pytest.raises(ConfigError) as excinfo:
        load_run_config(bad, "zz-sweep")
    assert excinfo.value.key_path == "sweep.axes[0].points"


def test_read_config_file(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps(_config(task="zz")), encoding="utf-8")
    assert read_config_file(path)["task"] == "zz"

    with pytest.raises(ConfigError) as excinfo:
        read_config_file(tmp_path / "missing.json")
    assert excinfo.value.key_path == "--config"

    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(ConfigError):
        read_config_file(broken)


FIGURE_CONFIGS = sorted((Path(__file__).resolve().parents[1] / "docs" / "figures").glob("*.json"))


@pytest.mark.parametrize("path", FIGURE_CONFIGS, ids=lambda p: p.stem)
def test_shipped_figure_configs_validate(path):
    """Cada configuración de docs/figures declara su tarea y una tabla de salida."""
    run = load_run_config(read_config_file(path))
    assert run.task in TASKS
    assert run.output.path is not None
    print("[SUMMARY] figure config", path.name, "->", run.task)


def test_every_figure_has_a_config():
    stems = {p.stem.split("_")[0] for p in FIGURE_CONFIGS}
    assert stems == {"fig2a", "fig2b", "fig3a", "fig3b", "fig3c", "fig3d", "fig4b", "fig4c", "fig4e", "fig4f"}
