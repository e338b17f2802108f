"""
io: Carga y validación estricta de configuración JSON.
"""

from .device import load_coupling, load_device, load_mode
from .run_config import TASKS, RunConfig, load_run_config, read_config_file

__all__ = [
    "load_coupling",
    "load_device",
    "load_mode",
    "TASKS",
    "RunConfig",
    "load_run_config",
    "read_config_file",
]
