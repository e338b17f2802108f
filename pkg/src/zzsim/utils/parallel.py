"""
zzsim.utils.parallel

Mapa ordenado de una función sobre puntos independientes.

threads <= 1 evalúa en secuencia; threads > 1 usa un multiprocessing.Pool
cuyo map conserva el orden de entrada. `func` debe ser una función de nivel
de módulo (picklable).
"""

from __future__ import annotations

import multiprocessing as mp
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def map_points(func: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    points = list(items)
    if threads <= 1 or len(points) <= 1:
        return [func(p) for p in points]

    with mp.Pool(processes=min(threads, len(points))) as pool:
        return pool.map(func, points)
