"""
Operadores de modo truncados y su inmersión en el espacio producto.
"""

from __future__ import annotations

import numpy as np

from zzsim.errors import InvalidDimensionError


def lowering_operator(levels: int) -> np.ndarray:
    """
    Operador de aniquilación truncado a `levels` niveles.

    Elemento (n−1, n) = √n para 1 ≤ n < levels; el resto cero.
    """
    if int(levels) != levels or levels < 2:
        raise InvalidDimensionError(f"Lowering operator needs levels >= 2, got {levels!r}")
    return np.diag(np.sqrt(np.arange(1, levels, dtype=float)), k=1).astype(complex)


def number_operator(levels: int) -> np.ndarray:
    return np.diag(np.arange(levels, dtype=float)).astype(complex)


def embed(op: np.ndarray, position: int, dims: tuple[int, ...]) -> np.ndarray:
    """I ⊗ … ⊗ op ⊗ … ⊗ I con `op` en la posición `position` (0 = modo a)."""
    if op.shape != (dims[position], dims[position]):
        raise InvalidDimensionError(
            f"Operator shape {op.shape} does not match dimension {dims[position]}"
        )
    out = np.eye(1, dtype=complex)
    for k, d in enumerate(dims):
        out = np.kron(out, op if k == position else np.eye(d, dtype=complex))
    return out
