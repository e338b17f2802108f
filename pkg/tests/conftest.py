# tests/conftest.py
"""
Configuración común para los tests.

Añade la carpeta 'src' al sys.path para que el paquete 'zzsim' sea
importable, y define los dispositivos de referencia:

- ab_device : ν_a = 6.1 GHz, ν_b = 5.5 GHz, α_a = −250 MHz, α_b = +250 MHz, g = 15 MHz
- aa_device : mismos parámetros con α_a = α_b = −250 MHz y Δ = −150 MHz
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]  # raíz del repo
SRC = ROOT / "src"

if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from zzsim.model.device import DeviceSpec  # noqa: E402
from zzsim.utils.logger import set_global_logger  # noqa: E402

NU_B = 5.5
PARKING = 6.1
G = 15.0
ALPHA = 250.0


@pytest.fixture(autouse=True)
def _reset_global_logger():
    # la CLI deja configurado el logger global
    yield
    set_global_logger(None)


@pytest.fixture
def ab_device() -> DeviceSpec:
    return DeviceSpec.pair(PARKING, NU_B, -ALPHA, ALPHA, G)


@pytest.fixture
def aa_device() -> DeviceSpec:
    return DeviceSpec.pair(NU_B - 0.150, NU_B, -ALPHA, -ALPHA, G)


@pytest.fixture
def uncoupled_device() -> DeviceSpec:
    return DeviceSpec.pair(PARKING, NU_B, -ALPHA, ALPHA, 0.0)
