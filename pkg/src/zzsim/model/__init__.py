"""
model: Bases desnudas, operadores de modo y Hamiltoniano del sistema.

Convención de unidades:
- Configuración en frecuencia lineal: GHz para frecuencias de modo/resonador,
  MHz para anharmonicidades y acoplos.
- Cálculo interno en frecuencia angular rad/ns; tiempo en ns.
"""

from .device import (
    BareLabel,
    CouplingSpec,
    DeviceSpec,
    DirectCoupling,
    ModeSpec,
    ResonatorCoupling,
    apply_asymmetry,
    bare_labels,
    computational_labels,
    excitation_number,
    index_label,
    label_index,
)
from .hamiltonian import bare_energy, build_hamiltonian, hamiltonian_parts
from .operators import embed, lowering_operator, number_operator

__all__ = [
    "BareLabel",
    "CouplingSpec",
    "DeviceSpec",
    "DirectCoupling",
    "ModeSpec",
    "ResonatorCoupling",
    "apply_asymmetry",
    "bare_labels",
    "computational_labels",
    "excitation_number",
    "index_label",
    "label_index",
    "bare_energy",
    "build_hamiltonian",
    "hamiltonian_parts",
    "embed",
    "lowering_operator",
    "number_operator",
]
