"""
Gráfica SVG mínima de una tabla: una curva por columna y, leyenda con los
nombres de columna, escala y lineal o logarítmica.

Usa matplotlib (extra "plots") con el backend Agg. El texto se conserva
como texto (svg.fonttype = "none") y se omite la fecha para que dos
ejecuciones idénticas produzcan el mismo fichero.
"""

from __future__ import annotations

import math
import numbers
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from zzsim.errors import ConfigError  # noqa: E402
from zzsim.utils.table import Table  # noqa: E402


def _numeric_column(table: Table, name: str, key_path: str) -> list[float]:
    if name not in table.columns:
        raise ConfigError(key_path, f"unknown column {name!r}; available: {table.columns}")
    values = table.column(name)
    if not all(isinstance(v, numbers.Real) for v in values):
        raise ConfigError(key_path, f"column {name!r} is not numeric")
    return [float(v) for v in values]


def render_svg(
    table: Table,
    x_column: str,
    y_columns: Sequence[str],
    path: str | Path,
    log_y: bool = False,
    abs_y: bool = False,
) -> Path:
    """
    Errores
    -------
    ConfigError si falta una columna o no es numérica (la CLI sale con 2).
    """
    if not y_columns:
        raise ConfigError("svg.y", "at least one y column is required")
    x = _numeric_column(table, x_column, "svg.x")
    series = {name: _numeric_column(table, name, "svg.y") for name in y_columns}

    with plt.rc_context({"svg.fonttype": "none", "svg.hashsalt": "zzsim"}):
        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        try:
            for name, ys in series.items():
                if abs_y:
                    ys = [abs(v) for v in ys]
                if log_y:
                    ys = [v if v > 0.0 else math.nan for v in ys]
                label = f"|{name}|" if abs_y else name
                if len(x) == 1:
                    ax.plot(x, ys, marker="o", linestyle="none", label=label)
                else:
                    ax.plot(x, ys, label=label)
            if log_y:
                ax.set_yscale("log")
            ax.set_xlabel(x_column)
            ax.legend()
            ax.grid(True, alpha=0.3)

            out = Path(path)
            out.parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(out, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
    return out
