"""
zzsim.optimize.golden

Búsqueda por sección áurea determinista sobre [a, b].

Devuelve además la lista de evaluaciones en orden, para que el llamador
pueda elegir el mejor punto visto y registrar la traza.
"""

from __future__ import annotations

import math
from typing import Callable

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/φ
INV_PHI_SQUARE = (3.0 - math.sqrt(5.0)) / 2.0  # 1/φ²


def golden_section(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 0.01,
) -> tuple[tuple[float, float], list[tuple[float, float]]]:
    """
    Reduce [a, b] hasta una anchura ≤ tol alrededor de un mínimo local.

    Retorno
    -------
    ((a', b'), evaluaciones) con evaluaciones = [(x, f(x)), ...] en orden.
    """
    a, b = min(a, b), max(a, b)
    evaluations: list[tuple[float, float]] = []
    h = b - a
    if h <= tol:
        return (a, b), evaluations

    def evaluate(x: float) -> float:
        y = f(x)
        evaluations.append((x, y))
        return y

    n = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))

    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = evaluate(c)
    yd = evaluate(d)

    for _ in range(n - 1):
        if yc < yd:
            b, d, yd = d, c, yc
            h *= INV_PHI
            c = a + INV_PHI_SQUARE * h
            yc = evaluate(c)
        else:
            a, c, yc = c, d, yd
            h *= INV_PHI
            d = a + INV_PHI * h
            yd = evaluate(d)

    bracket = (a, d) if yc < yd else (c, b)
    return bracket, evaluations
