"""
Construcción del Hamiltoniano H = H_a + H_b (+ H_r) + H_I.

H_l = ν_l n_l + (α_l/2) n_l(n_l − 1) por modo, acoplos en forma
de intercambio (conservan el número total de excitaciones).

La salida está siempre en rad/ns: cada frecuencia lineal en GHz se
multiplica por 2π; las magnitudes en MHz se pasan antes a GHz.

Para la propagación se expone además la descomposición afín en la
frecuencia del modo a:

    H(ν_a) = H_rest + 2π·ν_a·N_a

que permite evaluar H(t) en cada paso sin reconstruir la matriz.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from zzsim.errors import LevelIndexError

from .device import DeviceSpec, DirectCoupling, ModeSpec, ResonatorCoupling
from .operators import embed, lowering_operator, number_operator

TWO_PI = 2.0 * np.pi
MHZ = 1e-3  # MHz -> GHz


def bare_energy(mode: ModeSpec, n: int) -> float:
    """
    Energía desnuda del nivel n de un modo, en GHz.

    Retorno
    -------
    ν·n + (α/2)·n·(n−1), con α pasada de MHz a GHz.

    Errores
    -------
    LevelIndexError si n ∉ [0, levels).
    """
    if not 0 <= n < mode.levels:
        raise LevelIndexError(f"Level {n} out of range for a {mode.levels}-level mode")
    return mode.frequency * n + 0.5 * mode.anharmonicity * MHZ * n * (n - 1)


def _anharmonic_diagonal(mode: ModeSpec, include_linear: bool = True) -> np.ndarray:
    n = np.arange(mode.levels, dtype=float)
    linear = mode.frequency * n if include_linear else 0.0
    return TWO_PI * (linear + 0.5 * mode.anharmonicity * MHZ * n * (n - 1))


def _exchange(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """x†y + y†x."""
    term = x.conj().T @ y
    return term + term.conj().T


def hamiltonian_parts(device: DeviceSpec) -> tuple[np.ndarray, np.ndarray]:
    """
    Devuelve (H_rest, N_a) con H(ν_a) = H_rest + 2π·ν_a·N_a, en rad/ns.

    H_rest contiene todo salvo el término lineal ν_a·n_a.
    """
    dims = device.dims
    a = embed(lowering_operator(dims[0]), 0, dims)
    b = embed(lowering_operator(dims[1]), 1, dims)

    h_rest = embed(np.diag(_anharmonic_diagonal(device.mode_a, include_linear=False)).astype(complex), 0, dims)
    h_rest = h_rest + embed(np.diag(_anharmonic_diagonal(device.mode_b)).astype(complex), 1, dims)

    coupling = device.coupling
    if isinstance(coupling, DirectCoupling):
        h_rest = h_rest + TWO_PI * coupling.g * MHZ * _exchange(a, b)
    elif isinstance(coupling, ResonatorCoupling):
        d_r = coupling.resonator_levels
        r = embed(lowering_operator(d_r), 2, dims)
        h_rest = h_rest + TWO_PI * coupling.resonator_frequency * embed(number_operator(d_r), 2, dims)
        h_rest = h_rest + TWO_PI * coupling.g_a * MHZ * _exchange(a, r)
        h_rest = h_rest + TWO_PI * coupling.g_b * MHZ * _exchange(b, r)
    else:  # pragma: no cover - CouplingSpec es una unión cerrada
        raise TypeError(f"Unsupported coupling type: {type(coupling).__name__}")

    n_a = embed(number_operator(dims[0]), 0, dims)
    return h_rest, n_a


def build_hamiltonian(
    device: DeviceSpec,
    frequency_override_a: Optional[float] = None,
) -> np.ndarray:
    """
    Hamiltoniano completo en rad/ns.

    frequency_override_a (GHz), si se da, sustituye la frecuencia del modo a;
    es la vía por la que el pulso actúa sobre el sistema.
    """
    h_rest, n_a = hamiltonian_parts(device)
    freq_a = device.mode_a.frequency if frequency_override_a is None else float(frequency_override_a)
    return h_rest + TWO_PI * freq_a * n_a
