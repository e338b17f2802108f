"""
zzsim.spectrum.labeling

Diagonalización y etiquetado de autoestados por máximo solapamiento.

El etiquetado es una asignación óptima (húngara) que maximiza la suma de
solapamientos² entre etiquetas desnudas y autovectores, de modo que es
siempre una biyección, incluso cerca de cruces evitados donde el argmax
por fila asignaría dos etiquetas al mismo estado.

Empates (filas cuyo mejor solapamiento² no supera al segundo por más de
TIE_GAP) se resuelven a favor del autovector de menor energía, siempre que
la asignación siga siendo óptima. Las etiquetas computacionales se
resuelven primero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.optimize import linear_sum_assignment

from zzsim.model.device import (
    BareLabel,
    DeviceSpec,
    bare_labels,
    computational_labels,
    label_index,
)
from zzsim.model.hamiltonian import TWO_PI, build_hamiltonian
from zzsim.utils.logger import global_log

TIE_GAP = 1e-6
AMBIGUOUS_OVERLAP = 0.5
HERMITIAN_TOL = 1e-9

_ASSIGN_TOL = 1e-9
_FORBIDDEN = -1e6


@dataclass(frozen=True)
class LabeledState:
    label: BareLabel
    energy: float  # GHz
    eigenvector: np.ndarray = field(repr=False)
    overlap_sq: float
    ambiguous: bool = False
    tie_resolved: bool = False


@dataclass(frozen=True)
class LabeledSpectrum:
    """
    Autopares etiquetados, en el orden lineal de las etiquetas desnudas.
    """

    dims: tuple[int, ...]
    entries: tuple[LabeledState, ...]

    def state(self, label: BareLabel) -> LabeledState:
        return self.entries[label_index(tuple(label), self.dims)]

    def energy(self, label: BareLabel) -> float:
        return self.state(label).energy

    def eigenvector(self, label: BareLabel) -> np.ndarray:
        return self.state(label).eigenvector

    def computational_tie_resolved(self) -> bool:
        return any(self.state(lbl).tie_resolved for lbl in computational_labels(self.dims))

    def energies_sorted(self) -> np.ndarray:
        return np.sort([e.energy for e in self.entries])


# ---------------------------------------------------------------------------
# Asignación
# ---------------------------------------------------------------------------


def _solve(weights: np.ndarray, pinned: dict[int, int]) -> np.ndarray:
    """Asignación óptima fila→columna con pares fijados."""
    w = weights.copy()
    for row, col in pinned.items():
        w[row, :] = _FORBIDDEN
        w[:, col] = _FORBIDDEN
        w[row, col] = weights[row, col]
    rows, cols = linear_sum_assignment(w, maximize=True)
    assignment = np.empty(weights.shape[0], dtype=int)
    assignment[rows] = cols
    return assignment


def _total(weights: np.ndarray, assignment: np.ndarray) -> float:
    return float(weights[np.arange(weights.shape[0]), assignment].sum())


def _assign(
    weights: np.ndarray,
    eig_energies: np.ndarray,
    bare_energies: np.ndarray,
    labels: list[BareLabel],
) -> tuple[np.ndarray, set[int]]:
    assignment = _solve(weights, {})
    best_total = _total(weights, assignment)

    top_two = -np.sort(-weights, axis=1)[:, :2]
    tied_rows = [int(r) for r in np.flatnonzero(top_two[:, 0] - top_two[:, 1] < TIE_GAP)]
    if not tied_rows:
        return assignment, set()

    def priority(row: int) -> tuple[int, float, int]:
        computational = all(n <= 1 for n in labels[row])
        return (0 if computational else 1, float(bare_energies[row]), row)

    order_by_energy = np.argsort(eig_energies, kind="stable")
    pinned: dict[int, int] = {}
    for row in sorted(tied_rows, key=priority):
        best = weights[row].max()
        taken = set(pinned.values())
        for col in order_by_energy:
            col = int(col)
            if col in taken or weights[row, col] < best - TIE_GAP:
                continue
            trial = dict(pinned)
            trial[row] = col
            if _total(weights, _solve(weights, trial)) >= best_total - _ASSIGN_TOL:
                pinned = trial
                break

    if pinned:
        assignment = _solve(weights, pinned)
    return assignment, set(tied_rows)


def eigensolve_labeled(H: np.ndarray, bare_dims: tuple[int, ...]) -> LabeledSpectrum:
    """
    Diagonaliza H (rad/ns) y etiqueta cada autovector con un estado desnudo.

    Parámetros
    ----------
    H : matriz hermítica en la base desnuda (orden de label_index).
    bare_dims : dimensiones de los modos (d_a, d_b[, d_r]).

    Retorno
    -------
    LabeledSpectrum con energías en GHz.

    Errores
    -------
    ValueError si H no es cuadrada, no encaja con bare_dims o no es hermítica.
    Un solapamiento² < 0.5 no es fatal: marca la entrada como ambigua.
    """
    H = np.asarray(H, dtype=complex)
    dim = int(np.prod(bare_dims))
    if H.shape != (dim, dim):
        raise ValueError(f"Hamiltonian shape {H.shape} does not match dims {bare_dims}")
    if np.max(np.abs(H - H.conj().T)) > HERMITIAN_TOL:
        raise ValueError("Hamiltonian is not Hermitian")

    evals, evecs = np.linalg.eigh(H)
    weights = np.abs(evecs) ** 2  # fila = etiqueta desnuda, columna = autovector
    labels = list(bare_labels(bare_dims))
    assignment, tied = _assign(weights, evals, np.real(np.diag(H)), labels)

    entries = []
    for row, label in enumerate(labels):
        col = int(assignment[row])
        overlap_sq = float(weights[row, col])
        ambiguous = overlap_sq < AMBIGUOUS_OVERLAP
        if ambiguous:
            global_log("debug", "labeling_ambiguous", label=label, overlap_sq=overlap_sq)
        entries.append(
            LabeledState(
                label=label,
                energy=float(evals[col]) / TWO_PI,
                eigenvector=evecs[:, col].copy(),
                overlap_sq=overlap_sq,
                ambiguous=ambiguous,
                tie_resolved=row in tied,
            )
        )
    return LabeledSpectrum(dims=tuple(bare_dims), entries=tuple(entries))


def device_spectrum(device: DeviceSpec, frequency_override_a: Optional[float] = None) -> LabeledSpectrum:
    """Atajo: build_hamiltonian + eigensolve_labeled."""
    return eigensolve_labeled(build_hamiltonian(device, frequency_override_a), device.dims)
