"""
Carga de la sección "device" de la configuración.

Esquema (unidades en el nombre de cada clave):

    "device": {
        "mode_a": {"freq_ghz": 6.1, "anharm_mhz": -250, "levels": 3},
        "mode_b": {"freq_ghz": 5.5, "anharm_mhz": 250},
        "coupling": {"kind": "direct", "g_mhz": 15}
    }

    "coupling": {"kind": "resonator", "freq_ghz": 6.5,
                 "g_a_mhz": 60, "g_b_mhz": 60, "levels": 3}

"levels" es opcional (3 por defecto); los parámetros del resonador
también (ver DEFAULT_RESONATOR_*).
"""

from __future__ import annotations

from typing import Any, Mapping

from zzsim.errors import ConfigError, InvalidDimensionError
from zzsim.model.device import (
    DEFAULT_LEVELS,
    DEFAULT_RESONATOR_FREQ_GHZ,
    DEFAULT_RESONATOR_G_MHZ,
    DEFAULT_RESONATOR_LEVELS,
    CouplingSpec,
    DeviceSpec,
    DirectCoupling,
    ModeSpec,
    ResonatorCoupling,
)

from .validation import check_keys, get_float, get_int, get_str, join, require_mapping

_REQUIRED_DEVICE_KEYS = ("mode_a", "mode_b", "coupling")

_REQUIRED_MODE_KEYS = (
    "freq_ghz",    # frecuencia del modo (GHz)
    "anharm_mhz",  # anharmonicidad con signo (MHz)
)
_OPTIONAL_MODE_KEYS = ("levels",)

_DIRECT_KEYS = ("kind", "g_mhz")
_RESONATOR_KEYS = ("kind", "freq_ghz", "g_a_mhz", "g_b_mhz", "levels")


def load_mode(config: Any, path: str) -> ModeSpec:
    cfg = require_mapping(config, path)
    check_keys(cfg, path, _REQUIRED_MODE_KEYS, _OPTIONAL_MODE_KEYS)
    freq = get_float(cfg, "freq_ghz", path)
    if freq <= 0.0:
        raise ConfigError(join(path, "freq_ghz"), f"must be > 0, got {freq!r}")
    levels = get_int(cfg, "levels", path, DEFAULT_LEVELS)
    if levels < 3:
        raise ConfigError(join(path, "levels"), f"must be >= 3, got {levels!r}")
    return ModeSpec(frequency=freq, anharmonicity=get_float(cfg, "anharm_mhz", path), levels=levels)


def load_coupling(config: Any, path: str) -> CouplingSpec:
    cfg = require_mapping(config, path)
    kind = get_str(cfg, "kind", path, "direct", choices=("direct", "resonator"))

    if kind == "direct":
        check_keys(cfg, path, ("g_mhz",), _DIRECT_KEYS)
        return DirectCoupling(g=get_float(cfg, "g_mhz", path))

    check_keys(cfg, path, (), _RESONATOR_KEYS)
    freq = get_float(cfg, "freq_ghz", path, DEFAULT_RESONATOR_FREQ_GHZ)
    if freq <= 0.0:
        raise ConfigError(join(path, "freq_ghz"), f"must be > 0, got {freq!r}")
    levels = get_int(cfg, "levels", path, DEFAULT_RESONATOR_LEVELS)
    if levels < 2:
        raise ConfigError(join(path, "levels"), f"must be >= 2, got {levels!r}")
    return ResonatorCoupling(
        resonator_frequency=freq,
        g_a=get_float(cfg, "g_a_mhz", path, DEFAULT_RESONATOR_G_MHZ),
        g_b=get_float(cfg, "g_b_mhz", path, DEFAULT_RESONATOR_G_MHZ),
        resonator_levels=levels,
    )


def load_device(config: Mapping[str, Any], path: str = "device") -> DeviceSpec:
    """
    Construye un DeviceSpec validado.

    Errores
    -------
    ConfigError con la ruta de la clave (p.ej. "device.coupling.g_mhz").
    """
    cfg = require_mapping(config, path)
    check_keys(cfg, path, _REQUIRED_DEVICE_KEYS)
    try:
        return DeviceSpec(
            mode_a=load_mode(cfg["mode_a"], join(path, "mode_a")),
            mode_b=load_mode(cfg["mode_b"], join(path, "mode_b")),
            coupling=load_coupling(cfg["coupling"], join(path, "coupling")),
        )
    except InvalidDimensionError as exc:
        raise ConfigError(path, str(exc)) from exc
