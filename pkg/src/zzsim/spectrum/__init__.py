"""
spectrum: Diagonalización etiquetada, evaluadores de ZZ y barridos.
"""

from .labeling import LabeledSpectrum, LabeledState, device_spectrum, eigensolve_labeled
from .sweep import SweepAxis, level_sweep, sweep_zz
from .zz import ZZContrast, ZZResult, zz_analytic, zz_numeric, zz_on_off, zz_perturbative

__all__ = [
    "LabeledSpectrum",
    "LabeledState",
    "device_spectrum",
    "eigensolve_labeled",
    "SweepAxis",
    "level_sweep",
    "sweep_zz",
    "ZZContrast",
    "ZZResult",
    "zz_analytic",
    "zz_numeric",
    "zz_on_off",
    "zz_perturbative",
]
