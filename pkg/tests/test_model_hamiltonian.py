"""
Tests de zzsim.model: especificación del dispositivo, operadores y
construcción del Hamiltoniano.
"""

from __future__ import annotations

import numpy as np
import pytest

from zzsim.errors import ConfigError, InvalidDimensionError, LevelIndexError
from zzsim.model import (
    DeviceSpec,
    ModeSpec,
    ResonatorCoupling,
    apply_asymmetry,
    bare_energy,
    bare_labels,
    build_hamiltonian,
    computational_labels,
    embed,
    hamiltonian_parts,
    index_label,
    label_index,
    lowering_operator,
    number_operator,
)
from zzsim.model.hamiltonian import TWO_PI


def test_lowering_and_number_operators():
    """a†a coincide con diag(0, 1, …, d−1) y d < 2 se rechaza."""
    a = lowering_operator(4)
    assert np.allclose(a.conj().T @ a, number_operator(4))
    assert a[0, 1] == pytest.approx(1.0)
    assert a[2, 3] == pytest.approx(np.sqrt(3.0))
    with pytest.raises(InvalidDimensionError):
        lowering_operator(1)


def test_embed_places_mode_a_most_significant():
    """embed(n, 0, (3, 3)) vale n_a en |n_a n_b⟩ con el modo a más significativo."""
    dims = (3, 3)
    n_a = embed(number_operator(3), 0, dims)
    for label in bare_labels(dims):
        idx = label_index(label, dims)
        assert n_a[idx, idx] == pytest.approx(label[0])
        assert index_label(idx, dims) == label
    print("[SUMMARY] test_embed_places_mode_a_most_significant: 9 labels checked")


def test_mode_validation():
    with pytest.raises(InvalidDimensionError):
        ModeSpec(5.0, -250.0, levels=2)
    with pytest.raises(ConfigError):
        ModeSpec(-1.0, -250.0)
    with pytest.raises(ConfigError):
        ModeSpec(5.0, float("nan"))


def test_bare_energy_values(ab_device):
    """E_n = ν·n + (α/2)·n·(n−1) en GHz."""
    mode_b = ab_device.mode_b
    assert bare_energy(mode_b, 0) == 0.0
    assert bare_energy(mode_b, 1) == pytest.approx(5.5)
    assert bare_energy(mode_b, 2) == pytest.approx(11.25)
    with pytest.raises(LevelIndexError):
        bare_energy(mode_b, 3)


def test_hamiltonian_diagonal_and_coupling(ab_device):
    """Diagonal = energías desnudas, acoplo ⟨01|H|10⟩ = 2π·g."""
    H = build_hamiltonian(ab_device)
    dims = ab_device.dims
    assert H.shape == (9, 9)
    assert np.allclose(H, H.conj().T)

    for label in bare_labels(dims):
        idx = label_index(label, dims)
        expected = bare_energy(ab_device.mode_a, label[0]) + bare_energy(ab_device.mode_b, label[1])
        assert H[idx, idx].real / TWO_PI == pytest.approx(expected)

    i01 = label_index((0, 1), dims)
    i10 = label_index((1, 0), dims)
    i11 = label_index((1, 1), dims)
    i02 = label_index((0, 2), dims)
    assert abs(H[i01, i10]) / TWO_PI == pytest.approx(0.015)
    assert abs(H[i11, i02]) / TWO_PI == pytest.approx(np.sqrt(2.0) * 0.015)
    # el acoplo conserva el número de excitaciones
    assert H[label_index((0, 0), dims), i11] == 0.0


def test_affine_decomposition_matches_override(ab_device):
    """H(ν_a) = H_rest + 2π·ν_a·N_a para cualquier ν_a."""
    h_rest, n_a = hamiltonian_parts(ab_device)
    for freq in (5.5, 5.75, 6.3):
        assert np.allclose(h_rest + TWO_PI * freq * n_a, build_hamiltonian(ab_device, freq))


def test_resonator_topology_dimensions():
    """Con resonador el espacio es d_a·d_b·d_r y las etiquetas computacionales llevan n_r = 0."""
    device = DeviceSpec(
        mode_a=ModeSpec(6.1, -250.0),
        mode_b=ModeSpec(5.5, 250.0),
        coupling=ResonatorCoupling(),
    )
    assert device.has_resonator
    assert device.dims == (3, 3, 3)
    assert build_hamiltonian(device).shape == (27, 27)
    assert computational_labels(device.dims)[3] == (1, 1, 0)


def test_apply_asymmetry_keeps_signs(ab_device, aa_device):
    """δ_α = |α_b| − |α_a| se impone en el modo elegido conservando el signo."""
    ab = apply_asymmetry(ab_device, 20.0)
    assert ab.mode_a.anharmonicity == -250.0
    assert ab.mode_b.anharmonicity == pytest.approx(270.0)
    assert ab.delta_alpha_mhz == pytest.approx(20.0)

    aa = apply_asymmetry(aa_device, -20.0, on="a")
    assert aa.mode_a.anharmonicity == pytest.approx(-270.0)
    assert aa.mode_b.anharmonicity == -250.0
    assert aa.delta_alpha_mhz == pytest.approx(-20.0)

    with pytest.raises(ConfigError):
        apply_asymmetry(ab_device, 1.0, on="c")  # type: ignore[arg-type]


def test_with_detuning_moves_mode_a(ab_device):
    moved = ab_device.with_detuning(-150.0)
    assert moved.mode_b.frequency == 5.5
    assert moved.detuning_mhz == pytest.approx(-150.0)


def test_resonator_exchange_elements():
    """⟨100|H|001⟩ = 2π·g_a, ⟨010|H|001⟩ = 2π·g_b y sin término directo a–b."""
    device = DeviceSpec(
        mode_a=ModeSpec(6.1, -250.0),
        mode_b=ModeSpec(5.5, 250.0),
        coupling=ResonatorCoupling(g_a=60.0, g_b=45.0),
    )
    H = build_hamiltonian(device)
    dims = device.dims
    i100 = label_index((1, 0, 0), dims)
    i010 = label_index((0, 1, 0), dims)
    i001 = label_index((0, 0, 1), dims)
    assert abs(H[i100, i001]) / TWO_PI == pytest.approx(0.060)
    assert abs(H[i010, i001]) / TWO_PI == pytest.approx(0.045)
    assert H[i100, i010] == 0.0


@pytest.mark.parametrize("resonator", [False, True])
def test_hamiltonian_conserves_excitation_number(ab_device, resonator):
    """Ningún elemento de H conecta estados con distinto número total de excitaciones."""
    device = DeviceSpec(ab_device.mode_a, ab_device.mode_b, ResonatorCoupling()) if resonator else ab_device
    H = build_hamiltonian(device, 5.75)
    labels = list(bare_labels(device.dims))
    for row in labels:
        for col in labels:
            if sum(row) != sum(col):
                assert H[label_index(row, device.dims), label_index(col, device.dims)] == 0.0


def test_two_excitation_block_is_symmetric_without_asymmetry(ab_device):
    """
    δ_α = 0: el bloque {|20⟩, |11⟩, |02⟩} tiene autovalores E₁₁ y E₁₁ ± √(δ² + 4g²),
    δ = Δ − α_b, en 100 desintonías aleatorias.
    """
    rng = np.random.default_rng(5)
    dims = ab_device.dims
    block = [label_index(label, dims) for label in ((2, 0), (1, 1), (0, 2))]
    g = 15.0
    worst = 0.0
    for delta in rng.uniform(-500.0, 500.0, 100):
        device = ab_device.with_detuning(float(delta))
        H = build_hamiltonian(device)
        eig = np.linalg.eigvalsh(H[np.ix_(block, block)]) / TWO_PI
        e11 = bare_energy(device.mode_a, 1) + bare_energy(device.mode_b, 1)
        d = float(delta) - device.mode_b.anharmonicity
        s = np.sqrt(d * d + 4.0 * g * g) * 1e-3
        worst = max(worst, float(np.max(np.abs(eig - np.array([e11 - s, e11, e11 + s])))))
    assert worst < 1e-9
    print(f"[SUMMARY] test_two_excitation_block_is_symmetric_without_asymmetry: max deviation = {worst:.2e} GHz")
