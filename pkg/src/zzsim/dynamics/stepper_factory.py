"""
zzsim.dynamics.stepper_factory

Fábrica de esquemas de paso para el propagador.
"""

from __future__ import annotations

from typing import Literal

from .steppers import BaseStepper, Magnus4Stepper, MidpointStepper

StepperName = Literal["midpoint", "magnus4"]
STEPPER_NAMES = ("midpoint", "magnus4")


def get_stepper(name: StepperName) -> BaseStepper:
    """
    Devuelve una instancia del esquema solicitado.

    Parameters
    ----------
    name : {"midpoint", "magnus4"}
        "midpoint" es la exponencial a tramos evaluada en el punto medio;
        "magnus4" el desarrollo de Magnus de cuarto orden con dos nodos de Gauss.
    """
    if name == "midpoint":
        return MidpointStepper()
    if name == "magnus4":
        return Magnus4Stepper()

    raise ValueError(f"Unsupported stepper: {name!r}")
