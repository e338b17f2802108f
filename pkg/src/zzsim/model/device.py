"""
Tipos del dispositivo: modos anarmónicos, topología de acoplo y etiquetas
de estados desnudos.

Todos los tipos son inmutables (dataclasses frozen) y se validan al
construirse. Δ = ν_a − ν_b nunca se almacena: siempre se deriva.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from typing import Iterator, Literal, Tuple, Union

from zzsim.errors import ConfigError, InvalidDimensionError

BareLabel = Tuple[int, ...]

DEFAULT_LEVELS = 3

# Valores por defecto del bus (no publicados para la topología con resonador).
DEFAULT_RESONATOR_FREQ_GHZ = 6.5
DEFAULT_RESONATOR_G_MHZ = 60.0
DEFAULT_RESONATOR_LEVELS = 3


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(name, f"must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class ModeSpec:
    """
    Oscilador anarmónico truncado.

    frequency : GHz (ν = ω/2π), > 0
    anharmonicity : MHz con signo (α/2π); negativa = transmon, positiva = C-shunt
    levels : número de niveles (≥ 3)
    """

    frequency: float
    anharmonicity: float
    levels: int = DEFAULT_LEVELS

    def __post_init__(self) -> None:
        freq = _require_finite("frequency", self.frequency)
        if freq <= 0.0:
            raise ConfigError("frequency", f"must be > 0 GHz, got {freq!r}")
        _require_finite("anharmonicity", self.anharmonicity)
        if int(self.levels) != self.levels or self.levels < 3:
            raise InvalidDimensionError(f"Mode needs at least 3 levels, got {self.levels!r}")


@dataclass(frozen=True)
class DirectCoupling:
    """Acoplo capacitivo directo g(q_a†q_b + h.c.), g en MHz."""

    g: float

    def __post_init__(self) -> None:
        _require_finite("g", self.g)


@dataclass(frozen=True)
class ResonatorCoupling:
    """
    Acoplo a través de un resonador bus:
    g_a(q_a†r + h.c.) + g_b(q_b†r + h.c.), sin término directo a–b.
    """

    resonator_frequency: float = DEFAULT_RESONATOR_FREQ_GHZ
    g_a: float = DEFAULT_RESONATOR_G_MHZ
    g_b: float = DEFAULT_RESONATOR_G_MHZ
    resonator_levels: int = DEFAULT_RESONATOR_LEVELS

    def __post_init__(self) -> None:
        freq = _require_finite("resonator_frequency", self.resonator_frequency)
        if freq <= 0.0:
            raise ConfigError("resonator_frequency", f"must be > 0 GHz, got {freq!r}")
        _require_finite("g_a", self.g_a)
        _require_finite("g_b", self.g_b)
        if int(self.resonator_levels) != self.resonator_levels or self.resonator_levels < 2:
            raise InvalidDimensionError(
                f"Resonator needs at least 2 levels, got {self.resonator_levels!r}"
            )


CouplingSpec = Union[DirectCoupling, ResonatorCoupling]


@dataclass(frozen=True)
class DeviceSpec:
    """Par de modos a, b más su topología de acoplo."""

    mode_a: ModeSpec
    mode_b: ModeSpec
    coupling: CouplingSpec

    @classmethod
    def pair(
        cls,
        freq_a_ghz: float,
        freq_b_ghz: float,
        anharm_a_mhz: float,
        anharm_b_mhz: float,
        g_mhz: float,
        levels: int = DEFAULT_LEVELS,
    ) -> "DeviceSpec":
        """Atajo para el caso de acoplo directo con el mismo truncamiento."""
        return cls(
            mode_a=ModeSpec(freq_a_ghz, anharm_a_mhz, levels),
            mode_b=ModeSpec(freq_b_ghz, anharm_b_mhz, levels),
            coupling=DirectCoupling(g_mhz),
        )

    @property
    def has_resonator(self) -> bool:
        return isinstance(self.coupling, ResonatorCoupling)

    @property
    def dims(self) -> tuple[int, ...]:
        """Dimensiones (d_a, d_b) o (d_a, d_b, d_r); el modo a es el más significativo."""
        if isinstance(self.coupling, ResonatorCoupling):
            return (self.mode_a.levels, self.mode_b.levels, self.coupling.resonator_levels)
        return (self.mode_a.levels, self.mode_b.levels)

    @property
    def dimension(self) -> int:
        return math.prod(self.dims)

    @property
    def detuning_mhz(self) -> float:
        """Δ/2π = ν_a − ν_b en MHz."""
        return (self.mode_a.frequency - self.mode_b.frequency) * 1e3

    @property
    def delta_alpha_mhz(self) -> float:
        """δ_α = |α_b| − |α_a| en MHz."""
        return abs(self.mode_b.anharmonicity) - abs(self.mode_a.anharmonicity)

    def with_frequency_a(self, freq_ghz: float) -> "DeviceSpec":
        return replace(self, mode_a=replace(self.mode_a, frequency=float(freq_ghz)))

    def with_detuning(self, detuning_mhz: float) -> "DeviceSpec":
        """Mueve el modo a para que Δ = detuning_mhz (ν_b fijo)."""
        return self.with_frequency_a(self.mode_b.frequency + float(detuning_mhz) * 1e-3)

    def with_anharmonicities(self, anharm_a_mhz: float, anharm_b_mhz: float) -> "DeviceSpec":
        return replace(
            self,
            mode_a=replace(self.mode_a, anharmonicity=float(anharm_a_mhz)),
            mode_b=replace(self.mode_b, anharmonicity=float(anharm_b_mhz)),
        )

    def with_coupling_strength(self, g_mhz: float) -> "DeviceSpec":
        """Cambia g (directo) o g_a = g_b = g (resonador)."""
        if isinstance(self.coupling, ResonatorCoupling):
            return replace(self, coupling=replace(self.coupling, g_a=float(g_mhz), g_b=float(g_mhz)))
        return replace(self, coupling=DirectCoupling(float(g_mhz)))


def apply_asymmetry(
    device: DeviceSpec,
    delta_alpha_mhz: float,
    on: Literal["a", "b"] = "b",
) -> DeviceSpec:
    """
    Impone δ_α = |α_b| − |α_a| moviendo la anharmonicidad de un solo modo.

    on="b" (por defecto): α_a fija, |α_b| = |α_a| + δ_α conservando el signo de α_b.
    on="a": α_b fija, |α_a| = |α_b| − δ_α conservando el signo de α_a
            (si la magnitud resultante es negativa, el signo se invierte).
    """
    alpha_a = device.mode_a.anharmonicity
    alpha_b = device.mode_b.anharmonicity
    if on == "b":
        sign_b = -1.0 if alpha_b < 0.0 else 1.0
        return device.with_anharmonicities(alpha_a, sign_b * (abs(alpha_a) + delta_alpha_mhz))
    if on == "a":
        sign_a = 1.0 if alpha_a > 0.0 else -1.0
        return device.with_anharmonicities(sign_a * (abs(alpha_b) - delta_alpha_mhz), alpha_b)
    raise ConfigError("on", f"asymmetry must be applied on 'a' or 'b', got {on!r}")


# ---------------------------------------------------------------------------
# Etiquetas desnudas |n_a n_b (n_r)⟩
# ---------------------------------------------------------------------------


def label_index(label: BareLabel, dims: tuple[int, ...]) -> int:
    """index = n_a·(d_b·d_r) + n_b·d_r + n_r (modo a más significativo)."""
    if len(label) != len(dims):
        raise ValueError(f"Label {label!r} does not match dims {dims!r}")
    index = 0
    for n, d in zip(label, dims):
        if not 0 <= n < d:
            raise ValueError(f"Occupation {n} out of range for dimension {d}")
        index = index * d + n
    return index


def index_label(index: int, dims: tuple[int, ...]) -> BareLabel:
    occupations = []
    for d in reversed(dims):
        index, n = divmod(index, d)
        occupations.append(n)
    return tuple(reversed(occupations))


def bare_labels(dims: tuple[int, ...]) -> Iterator[BareLabel]:
    """Todas las etiquetas en orden de índice lineal."""
    return itertools.product(*(range(d) for d in dims))


def excitation_number(label: BareLabel) -> int:
    return sum(label)


def computational_labels(dims: tuple[int, ...]) -> list[BareLabel]:
    """|00⟩, |01⟩, |10⟩, |11⟩ (con el resonador en vacío si existe)."""
    pad = (0,) * (len(dims) - 2)
    return [(0, 0) + pad, (0, 1) + pad, (1, 0) + pad, (1, 1) + pad]
