"""
zzsim.errors

Jerarquía de excepciones del simulador.

Cada clase hereda además de la excepción estándar equivalente, de modo que
el código cliente puede capturar ValueError / IndexError / ArithmeticError
sin conocer zzsim. La CLI usa la jerarquía para decidir el código de salida.
"""

from __future__ import annotations


class ZZSimError(Exception):
    """Raíz de todos los errores propios de zzsim."""


class ConfigError(ZZSimError, ValueError):
    """
    Configuración inválida.

    key_path:
        Ruta con puntos de la clave problemática (p.ej. "device.coupling.g_mhz").
    """

    def __init__(self, key_path: str, message: str) -> None:
        self.key_path = key_path
        super().__init__(f"{key_path}: {message}" if key_path else message)


class InvalidDimensionError(ZZSimError, ValueError):
    """Dimensión de espacio de Hilbert no válida (p.ej. menos de 2 niveles)."""


class LevelIndexError(ZZSimError, IndexError):
    """Número de ocupación fuera del rango [0, levels)."""


class GridError(ZZSimError, ValueError):
    """Rejilla de barrido vacía o mal definida."""


class PulseDomainError(ZZSimError, ValueError):
    """Tiempo fuera de [0, total_duration] o pulso inconsistente."""


class BranchError(ZZSimError, ValueError):
    """La rama de extracción de ángulos no es válida para la matriz dada."""


class NumericalError(ZZSimError, ArithmeticError):
    """Fallo numérico durante una evaluación."""


class PoleError(NumericalError):
    """Evaluación demasiado cerca de un polo de la fórmula cerrada de ZZ."""


class StepSizeError(NumericalError):
    """El propagador perdió unitariedad; hay que reducir el paso temporal."""


class FrameError(NumericalError):
    """Etiquetado ambiguo del marco lógico en el punto de aparcamiento."""


class CalibrationError(NumericalError):
    """El objetivo de calibración no es finito en ningún punto evaluado."""


__all__ = [
    "ZZSimError",
    "ConfigError",
    "InvalidDimensionError",
    "LevelIndexError",
    "GridError",
    "PulseDomainError",
    "BranchError",
    "NumericalError",
    "PoleError",
    "StepSizeError",
    "FrameError",
    "CalibrationError",
]
