"""
zzsim.gates.fidelity

Fidelidad promedio sobre estados y canonicalización de virtual-Z.

    F = [Tr(P†P) + |Tr(T†P)|²] / 20

P puede ser sub-unitaria (proyección con fuga); el término Tr(P†P) la penaliza.

Las rotaciones virtuales Z_a(φ_a)⊗Z_b(φ_b) = diag(1, e^{iφ_b}, e^{iφ_a}, e^{i(φ_a+φ_b)})
se aplican por la izquierda. Solo cambian |Tr(T†·D·P)|² = |Σ_k d_k m_k|²,
con m_k = Σ_j conj(T_kj)·P_kj, así que la búsqueda trabaja sobre los
cuatro m_k: rejilla gruesa 64×64 y ascenso por coordenadas en forma
cerrada (φ óptimo = arg(A) − arg(B) para |A + e^{iφ}B|).
"""

from __future__ import annotations

import math

import numpy as np

from zzsim.utils.logger import global_log

from .angles import wrap_angle

COARSE_POINTS = 64
ANGLE_TOL = 1e-10
MAX_SWEEPS = 10_000


def average_fidelity(actual: np.ndarray, target: np.ndarray) -> float:
    P = np.asarray(actual)
    T = np.asarray(target)
    norm = float(np.trace(P.conj().T @ P).real)
    overlap = abs(np.trace(T.conj().T @ P)) ** 2
    return (norm + overlap) / 20.0


def virtual_z(phi_a: float, phi_b: float) -> np.ndarray:
    return np.diag(np.exp(1j * np.array([0.0, phi_b, phi_a, phi_a + phi_b])))


def _best_phase(A: complex, B: complex, current: float) -> float:
    if abs(B) == 0.0 or abs(A) == 0.0:
        return current
    return wrap_angle(float(np.angle(A) - np.angle(B)))


def canonicalize_virtual_z(actual: np.ndarray, target: np.ndarray) -> tuple[np.ndarray, tuple[float, float]]:
    """
    Busca (φ_a, φ_b) que maximizan average_fidelity(Z_a⊗Z_b · actual, target).

    Retorno
    -------
    (matriz rotada, (φ_a, φ_b)) con ángulos en (−π, π].
    """
    P = np.asarray(actual, dtype=complex)
    m = np.sum(np.conj(np.asarray(target)) * P, axis=1)

    grid = np.linspace(-math.pi, math.pi, COARSE_POINTS, endpoint=False)
    ga, gb = np.meshgrid(grid, grid, indexing="ij")
    score = np.abs(m[0] + np.exp(1j * gb) * m[1] + np.exp(1j * ga) * m[2] + np.exp(1j * (ga + gb)) * m[3])
    ia, ib = np.unravel_index(int(np.argmax(score)), score.shape)
    phi_a, phi_b = float(grid[ia]), float(grid[ib])

    for sweep in range(MAX_SWEEPS):
        ea = np.exp(1j * phi_a)
        new_b = _best_phase(m[0] + ea * m[2], m[1] + ea * m[3], phi_b)
        eb = np.exp(1j * new_b)
        new_a = _best_phase(m[0] + eb * m[1], m[2] + eb * m[3], phi_a)
        change = max(abs(wrap_angle(new_a - phi_a)), abs(wrap_angle(new_b - phi_b)))
        phi_a, phi_b = new_a, new_b
        if change < ANGLE_TOL:
            break
    else:
        global_log("debug", "virtual_z_not_converged", sweeps=MAX_SWEEPS, last_change=change)

    return virtual_z(phi_a, phi_b) @ P, (phi_a, phi_b)
