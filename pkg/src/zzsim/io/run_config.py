"""
Configuración de ejecución (RunConfig) para la CLI.

Un fichero JSON con secciones; las que una tarea no usa pueden omitirse,
pero las claves desconocidas siempre se rechazan. Secciones:

    device       : ver zzsim.io.device
    sweep        : {"axes": [{"parameter", "start", "stop", "points"}, ...],
                    "asymmetry_on": "b"}
    pulse        : {"parking_ghz", "interaction_ghz", "overshoot_mhz", "hold_ns",
                    "ramp_ns", "time_step_ns", "padding_ns"}
    gate         : {"kind": "cz"|"iswap"|"xy"|"cphase", "theta_rad", "phi_rad"}
    calibration  : {"hold_min_ns", "hold_max_ns", "hold_step_ns",
                    "overshoot_min_mhz", "overshoot_max_mhz", "objective"}
    asymmetry    : {"start_mhz", "stop_mhz", "points", "on"}
    hold_scan    : {"start_ns", "stop_ns", "step_ns"}
    zz           : {"on_freq_a_ghz"}
    population   : {"initial": "11", "stride": 1}
    output       : {"path", "format"}
    svg          : {"path", "x", "y": [...], "log_y", "abs_y"}
    logging      : {"log_level", "log_json"}
    execution    : {"threads", "scheme"}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping, Optional

from zzsim.dynamics.frame import LOGICAL_LABELS
from zzsim.dynamics.stepper_factory import STEPPER_NAMES
from zzsim.errors import ConfigError, GridError, PulseDomainError
from zzsim.gates.targets import GATE_NAMES, GateKind, parse_gate_kind
from zzsim.model.device import DeviceSpec
from zzsim.optimize.calibration import (
    DEFAULT_HOLD_STEP_NS,
    DEFAULT_OVERSHOOT_BOUNDS_MHZ,
    OBJECTIVES,
    hold_grid,
)
from zzsim.pulse.flat_top import DEFAULT_PADDING_NS, DEFAULT_RAMP_NS, DEFAULT_TIME_STEP_NS, PulseSpec
from zzsim.spectrum.sweep import SWEEP_PARAMETERS, SweepAxis
from zzsim.utils.exporter import EXPORT_FORMATS
from zzsim.utils.logger import LOG_LEVELS

from .device import load_device
from .validation import check_keys, get_bool, get_float, get_int, get_str, join, require_mapping

TASKS = (
    "spectrum",
    "zz",
    "zz-sweep",
    "gate",
    "calibrate",
    "asymmetry-sweep",
    "pulse-dump",
    "hold-scan",
    "population-dump",
)

_SECTIONS = (
    "task",
    "device",
    "sweep",
    "pulse",
    "gate",
    "calibration",
    "asymmetry",
    "hold_scan",
    "zz",
    "population",
    "output",
    "svg",
    "logging",
    "execution",
)

# Secciones obligatorias por tarea (además de "device").
_TASK_SECTIONS = {
    "spectrum": ("sweep",),
    "zz": (),
    "zz-sweep": ("sweep",),
    "gate": ("pulse", "gate"),
    "calibrate": ("gate",),
    "asymmetry-sweep": ("gate", "asymmetry"),
    "pulse-dump": ("pulse",),
    "hold-scan": ("gate", "hold_scan"),
    "population-dump": ("pulse",),
}


# ---------------------------------------------------------------------------
# Secciones tipadas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepSettings:
    axes: tuple[SweepAxis, ...]
    asymmetry_on: str = "b"


@dataclass(frozen=True)
class PulseSettings:
    """Campos de pulso; los ausentes se resuelven con el dispositivo y la puerta."""

    parking_ghz: Optional[float] = None
    interaction_ghz: Optional[float] = None
    overshoot_mhz: float = 0.0
    hold_ns: Optional[float] = None
    ramp_ns: float = DEFAULT_RAMP_NS
    time_step_ns: float = DEFAULT_TIME_STEP_NS
    padding_ns: float = DEFAULT_PADDING_NS

    def build(self, device: DeviceSpec, kind: GateKind, path: str = "pulse") -> PulseSpec:
        if self.hold_ns is None:
            raise ConfigError(join(path, "hold_ns"), "missing required key")
        interaction = kind.interaction_frequency(device) if self.interaction_ghz is None else self.interaction_ghz
        try:
            return PulseSpec(
                parking_frequency=kind.default_parking(device, interaction)
                if self.parking_ghz is None
                else self.parking_ghz,
                interaction_frequency=interaction,
                hold=self.hold_ns,
                overshoot=self.overshoot_mhz,
                ramp=self.ramp_ns,
                time_step=self.time_step_ns,
                padding=self.padding_ns,
            )
        except PulseDomainError as exc:
            raise ConfigError(join(path, "hold_ns"), str(exc)) from exc
        except ConfigError as exc:
            raise ConfigError(path, str(exc)) from exc


@dataclass(frozen=True)
class CalibrationSettings:
    hold_bounds: tuple[float, float] = (12.0, 24.0)
    hold_step: float = DEFAULT_HOLD_STEP_NS
    overshoot_bounds: tuple[float, float] = DEFAULT_OVERSHOOT_BOUNDS_MHZ
    objective: Optional[str] = None  # None: según la rama de la puerta


@dataclass(frozen=True)
class AsymmetrySettings:
    start_mhz: float
    stop_mhz: float
    points: int
    on: str = "b"


@dataclass(frozen=True)
class OutputSettings:
    path: Optional[str] = None
    format: str = "csv"


@dataclass(frozen=True)
class SvgSettings:
    path: Optional[str] = None
    x: Optional[str] = None
    y: tuple[str, ...] = ()
    log_y: bool = False
    abs_y: bool = False


@dataclass(frozen=True)
class RunConfig:
    task: str
    device: DeviceSpec
    sweep: Optional[SweepSettings] = None
    pulse: PulseSettings = field(default_factory=PulseSettings)
    gate: GateKind = field(default_factory=GateKind.cz)
    calibration: CalibrationSettings = field(default_factory=CalibrationSettings)
    asymmetry: Optional[AsymmetrySettings] = None
    holds: tuple[float, ...] = ()
    on_freq_a_ghz: Optional[float] = None
    initial: str = "11"
    stride: int = 1
    output: OutputSettings = field(default_factory=OutputSettings)
    svg: SvgSettings = field(default_factory=SvgSettings)
    logging: Mapping[str, Any] = field(default_factory=dict)
    threads: int = 1
    scheme: str = "midpoint"


# ---------------------------------------------------------------------------
# Cargadores por sección
# ---------------------------------------------------------------------------


def _positive(value: float, path: str) -> float:
    if value <= 0.0:
        raise ConfigError(path, f"must be > 0, got {value!r}")
    return value


def _load_sweep(config: Any, path: str = "sweep") -> SweepSettings:
    cfg = require_mapping(config, path)
    check_keys(cfg, path, ("axes",), ("asymmetry_on",))
    raw_axes = cfg["axes"]
    if not isinstance(raw_axes, list) or not 1 <= len(raw_axes) <= 2:
        raise ConfigError(join(path, "axes"), "expected a list with one or two axes")

    axes = []
    for i, raw in enumerate(raw_axes):
        ax_path = f"{path}.axes[{i}]"
        ax = require_mapping(raw, ax_path)
        check_keys(ax, ax_path, ("parameter", "start", "stop", "points"))
        parameter = get_str(ax, "parameter", ax_path, choices=SWEEP_PARAMETERS)
        try:
            axes.append(
                SweepAxis(
                    parameter=parameter,
                    start=get_float(ax, "start", ax_path),
                    stop=get_float(ax, "stop", ax_path),
                    points=get_int(ax, "points", ax_path),
                )
            )
        except GridError as exc:
            raise ConfigError(join(ax_path, "points"), str(exc)) from exc
    if len(axes) == 2 and axes[0].parameter == axes[1].parameter:
        raise ConfigError(join(path, "axes"), "both axes vary the same parameter")
    return SweepSettings(
        axes=tuple(axes),
        asymmetry_on=get_str(cfg, "asymmetry_on", path, "b", choices=("a", "b")),
    )


def _load_pulse(config: Any, path: str = "pulse") -> PulseSettings:
    cfg = require_mapping(config, path)
    keys = ("parking_ghz", "interaction_ghz", "overshoot_mhz", "hold_ns", "ramp_ns", "time_step_ns", "padding_ns")
    check_keys(cfg, path, (), keys)
    time_step = get_float(cfg, "time_step_ns", path, DEFAULT_TIME_STEP_NS)
    return PulseSettings(
        parking_ghz=get_float(cfg, "parking_ghz", path),
        interaction_ghz=get_float(cfg, "interaction_ghz", path),
        overshoot_mhz=get_float(cfg, "overshoot_mhz", path, 0.0),
        hold_ns=get_float(cfg, "hold_ns", path),
        ramp_ns=get_float(cfg, "ramp_ns", path, DEFAULT_RAMP_NS),
        time_step_ns=_positive(time_step, join(path, "time_step_ns")),
        padding_ns=get_float(cfg, "padding_ns", path, DEFAULT_PADDING_NS),
    )


def _load_gate(config: Any, path: str = "gate") -> GateKind:
    cfg = require_mapping(config, path)
    check_keys(cfg, path, ("kind",), ("theta_rad", "phi_rad"))
    kind = get_str(cfg, "kind", path, choices=GATE_NAMES)
    return parse_gate_kind(kind, get_float(cfg, "theta_rad", path), get_float(cfg, "phi_rad", path))


def _load_calibration(config: Any, path: str = "calibration") -> CalibrationSettings:
    cfg = require_mapping(config, path)
    keys = ("hold_min_ns", "hold_max_ns", "hold_step_ns", "overshoot_min_mhz", "overshoot_max_mhz", "objective")
    check_keys(cfg, path, (), keys)
    default = CalibrationSettings()
    hold_bounds = (
        get_float(cfg, "hold_min_ns", path, default.hold_bounds[0]),
        get_float(cfg, "hold_max_ns", path, default.hold_bounds[1]),
    )
    if hold_bounds[0] > hold_bounds[1]:
        raise ConfigError(join(path, "hold_max_ns"), "must be >= hold_min_ns")
    overshoot_bounds = (
        get_float(cfg, "overshoot_min_mhz", path, default.overshoot_bounds[0]),
        get_float(cfg, "overshoot_max_mhz", path, default.overshoot_bounds[1]),
    )
    if overshoot_bounds[0] > overshoot_bounds[1]:
        raise ConfigError(join(path, "overshoot_max_mhz"), "must be >= overshoot_min_mhz")
    return CalibrationSettings(
        hold_bounds=hold_bounds,
        hold_step=_positive(get_float(cfg, "hold_step_ns", path, default.hold_step), join(path, "hold_step_ns")),
        overshoot_bounds=overshoot_bounds,
        objective=get_str(cfg, "objective", path, default.objective, choices=OBJECTIVES),
    )


def _load_asymmetry(config: Any, path: str = "asymmetry") -> AsymmetrySettings:
    cfg = require_mapping(config, path)
    check_keys(cfg, path, ("start_mhz", "stop_mhz", "points"), ("on",))
    points = get_int(cfg, "points", path)
    if points < 1:
        raise ConfigError(join(path, "points"), f"must be >= 1, got {points!r}")
    return AsymmetrySettings(
        start_mhz=get_float(cfg, "start_mhz", path),
        stop_mhz=get_float(cfg, "stop_mhz", path),
        points=points,
        on=get_str(cfg, "on", path, "b", choices=("a", "b")),
    )


def _load_holds(config: Any, path: str = "hold_scan") -> tuple[float, ...]:
    cfg = require_mapping(config, path)
    check_keys(cfg, path, ("start_ns", "stop_ns"), ("step_ns",))
    try:
        return tuple(
            hold_grid(
                (get_float(cfg, "start_ns", path), get_float(cfg, "stop_ns", path)),
                get_float(cfg, "step_ns", path, DEFAULT_HOLD_STEP_NS),
            )
        )
    except GridError as exc:
        raise ConfigError(path, str(exc)) from exc


def _load_svg(config: Any, path: str = "svg") -> SvgSettings:
    cfg = require_mapping(config, path)
    check_keys(cfg, path, (), ("path", "x", "y", "log_y", "abs_y"))
    y = cfg.get("y", [])
    if isinstance(y, str):
        y = [y]
    if not isinstance(y, list) or not all(isinstance(c, str) for c in y):
        raise ConfigError(join(path, "y"), "expected a column name or a list of column names")
    return SvgSettings(
        path=get_str(cfg, "path", path),
        x=get_str(cfg, "x", path),
        y=tuple(y),
        log_y=get_bool(cfg, "log_y", path),
        abs_y=get_bool(cfg, "abs_y", path),
    )


# ---------------------------------------------------------------------------
# API pública
# ---------------------------------------------------------------------------


def load_run_config(config: Mapping[str, Any], task: Optional[str] = None) -> RunConfig:
    """
    Valida un diccionario de configuración completo.

    Parámetros
    ----------
    config : contenido del JSON.
    task : tarea de la CLI; si el fichero declara "task", deben coincidir.

    Errores
    -------
    ConfigError con la ruta de la clave problemática.
    """
    cfg = require_mapping(config, "")
    check_keys(cfg, "", ("device",), _SECTIONS)

    declared = get_str(cfg, "task", "", None, choices=TASKS)
    if task is None:
        task = declared
    if task is None:
        raise ConfigError("task", "missing required key")
    if task not in TASKS:
        raise ConfigError("task", f"unknown task {task!r}")
    if declared is not None and declared != task:
        raise ConfigError("task", f"config declares {declared!r} but {task!r} was requested")

    for section in _TASK_SECTIONS[task]:
        if section not in cfg:
            raise ConfigError(section, f"section required by task {task!r}")

    device = load_device(cfg["device"])
    kwargs: dict[str, Any] = {"task": task, "device": device}

    if "sweep" in cfg:
        kwargs["sweep"] = _load_sweep(cfg["sweep"])
        if task == "spectrum" and len(kwargs["sweep"].axes) != 1:
            raise ConfigError("sweep.axes", "the spectrum task takes a single axis")
    if "pulse" in cfg:
        kwargs["pulse"] = _load_pulse(cfg["pulse"])
    if "gate" in cfg:
        kwargs["gate"] = _load_gate(cfg["gate"])
    if "calibration" in cfg:
        kwargs["calibration"] = _load_calibration(cfg["calibration"])
    if "asymmetry" in cfg:
        kwargs["asymmetry"] = _load_asymmetry(cfg["asymmetry"])
    if "hold_scan" in cfg:
        kwargs["holds"] = _load_holds(cfg["hold_scan"])

    if "zz" in cfg:
        zz = require_mapping(cfg["zz"], "zz")
        check_keys(zz, "zz", (), ("on_freq_a_ghz",))
        kwargs["on_freq_a_ghz"] = get_float(zz, "on_freq_a_ghz", "zz")

    if "population" in cfg:
        pop = require_mapping(cfg["population"], "population")
        check_keys(pop, "population", (), ("initial", "stride"))
        kwargs["initial"] = get_str(pop, "initial", "population", "11", choices=LOGICAL_LABELS)
        stride = get_int(pop, "stride", "population", 1)
        if stride < 1:
            raise ConfigError("population.stride", f"must be >= 1, got {stride!r}")
        kwargs["stride"] = stride

    if "output" in cfg:
        out = require_mapping(cfg["output"], "output")
        check_keys(out, "output", (), ("path", "format"))
        kwargs["output"] = OutputSettings(
            path=get_str(out, "path", "output"),
            format=get_str(out, "format", "output", "csv", choices=EXPORT_FORMATS),
        )
    if "svg" in cfg:
        kwargs["svg"] = _load_svg(cfg["svg"])

    if "logging" in cfg:
        log_cfg = require_mapping(cfg["logging"], "logging")
        check_keys(log_cfg, "logging", (), ("log_level", "log_json"))
        kwargs["logging"] = {
            "log_level": get_str(log_cfg, "log_level", "logging", "info", choices=tuple(LOG_LEVELS)),
            "log_json": get_bool(log_cfg, "log_json", "logging"),
        }

    if "execution" in cfg:
        ex = require_mapping(cfg["execution"], "execution")
        check_keys(ex, "execution", (), ("threads", "scheme"))
        threads = get_int(ex, "threads", "execution", 1)
        if threads < 1:
            raise ConfigError("execution.threads", f"must be >= 1, got {threads!r}")
        kwargs["threads"] = threads
        kwargs["scheme"] = get_str(ex, "scheme", "execution", "midpoint", choices=STEPPER_NAMES)

    run_config = RunConfig(**kwargs)
    if task in ("gate", "pulse-dump", "population-dump"):
        # falla pronto si el pulso no es construible
        run_config.pulse.build(device, run_config.gate)
    return run_config


def read_config_file(path: str | Path) -> dict[str, Any]:
    """
    Lee un JSON de configuración.

    Errores
    -------
    ConfigError si el fichero no existe o no es JSON válido.
    """
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise ConfigError("--config", f"file not found: {p}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("--config", f"invalid JSON in {p}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError("--config", "top-level JSON value must be an object")
    return data
