"""
Utilidades de validación estricta de configuración.

Toda función recibe la ruta con puntos de la sección (p.ej. "device.mode_a")
para que los errores nombren la clave exacta.
"""

from __future__ import annotations

import math
from typing import Any, Iterable, Mapping, Optional

from zzsim.errors import ConfigError


def join(path: str, key: str) -> str:
    return f"{path}.{key}" if path else key


def require_mapping(value: Any, path: str) -> Mapping[str, Any]:
    if not isinstance(value, Mapping):
        raise ConfigError(path, f"expected an object, got {type(value).__name__}")
    return value


def check_keys(
    config: Mapping[str, Any],
    path: str,
    required: Iterable[str] = (),
    optional: Iterable[str] = (),
) -> None:
    """Claves obligatorias presentes y ninguna clave desconocida."""
    required = tuple(required)
    allowed = set(required) | set(optional)
    for key in required:
        if key not in config:
            raise ConfigError(join(path, key), "missing required key")
    unknown = sorted(k for k in config if k not in allowed)
    if unknown:
        raise ConfigError(join(path, unknown[0]), "unknown key")


def get_float(
    config: Mapping[str, Any],
    key: str,
    path: str,
    default: Optional[float] = None,
) -> Optional[float]:
    if key not in config:
        return default
    value = config[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(join(path, key), f"expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(join(path, key), "must be finite")
    return value


def get_int(config: Mapping[str, Any], key: str, path: str, default: Optional[int] = None) -> Optional[int]:
    if key not in config:
        return default
    value = config[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(join(path, key), f"expected an integer, got {value!r}")
    return int(value)


def get_bool(config: Mapping[str, Any], key: str, path: str, default: bool = False) -> bool:
    if key not in config:
        return default
    value = config[key]
    if not isinstance(value, bool):
        raise ConfigError(join(path, key), f"expected true/false, got {value!r}")
    return value


def get_str(
    config: Mapping[str, Any],
    key: str,
    path: str,
    default: Optional[str] = None,
    choices: Optional[Iterable[str]] = None,
) -> Optional[str]:
    if key not in config:
        return default
    value = config[key]
    if not isinstance(value, str):
        raise ConfigError(join(path, key), f"expected a string, got {value!r}")
    if choices is not None and value not in tuple(choices):
        raise ConfigError(join(path, key), f"must be one of {tuple(choices)}, got {value!r}")
    return value
