"""
zzsim.gates.angles

Extracción de (θ, φ) con combinaciones invariantes bajo virtual-Z y fase global.

    θ = atan2(|U_01,10|, |U_01,01|)
    diagonal : φ = wrap(−arg(U_00 U_11 / (U_01,01 U_10,10)))
    swap     : φ = wrap(π − arg(U_00 U_11 / (U_01,10 U_10,01)))
"""

from __future__ import annotations

import math

import numpy as np

from zzsim.errors import BranchError

from .targets import Branch

BRANCH_MIN_AMPLITUDE = 1e-3


def wrap_angle(x: float) -> float:
    """Envuelve en (−π, π]."""
    return math.pi - ((math.pi - x) % (2.0 * math.pi))


def extract_angles(canonical: np.ndarray, branch: Branch) -> tuple[float, float]:
    U = np.asarray(canonical)
    theta = math.atan2(abs(U[1, 2]), abs(U[1, 1]))
    ratio_num = U[0, 0] * U[3, 3]

    if branch == "diagonal":
        if abs(U[1, 1]) <= BRANCH_MIN_AMPLITUDE or abs(U[2, 2]) <= BRANCH_MIN_AMPLITUDE:
            raise BranchError("Diagonal elements too small for the 'diagonal' branch; use the 'swap' branch")
        return theta, wrap_angle(-float(np.angle(ratio_num / (U[1, 1] * U[2, 2]))))

    if branch == "swap":
        if abs(U[1, 2]) <= BRANCH_MIN_AMPLITUDE or abs(U[2, 1]) <= BRANCH_MIN_AMPLITUDE:
            raise BranchError("Swap elements too small for the 'swap' branch; use the 'diagonal' branch")
        return theta, wrap_angle(math.pi - float(np.angle(ratio_num / (U[1, 2] * U[2, 1]))))

    raise BranchError(f"Unknown branch {branch!r}")
