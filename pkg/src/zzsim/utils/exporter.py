# src/zzsim/utils/exporter.py
from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Any, Optional

from .config import ExportConfig
from .table import Table


EXPORT_FORMATS = ("csv", "json", "parquet")


# ---------------------------------------------------------------------------
# Utilidades internas
# ---------------------------------------------------------------------------


def _ensure_parent_dir(path: str | Path) -> Path:
    """Asegura que existe la carpeta padre y devuelve el Path normalizado."""
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _prepare_target(path: str | Path, config: Optional[ExportConfig]) -> Path:
    cfg = config or ExportConfig()
    p = _ensure_parent_dir(path)
    if not cfg.overwrite and p.exists():
        raise FileExistsError(p)
    return p


def _csv_cell(value: Any) -> Any:
    # bool antes que int: True se escribe como 1 para que la columna sea numérica
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, float):
        return repr(float(value))
    return value


def _json_cell(value: Any) -> Any:
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


# ---------------------------------------------------------------------------
# Exportaciones básicas: CSV / JSON / Parquet
# ---------------------------------------------------------------------------


def export_csv(
    table: Table,
    path: str | Path,
    config: Optional[ExportConfig] = None,
) -> Path:
    """
    Escribe la tabla a CSV plano.

    - La cabecera se escribe siempre (tabla vacía -> fichero solo con cabecera).
    - Los floats se escriben con repr(): precisión completa y salida idéntica
      byte a byte entre ejecuciones.
    """
    p = _prepare_target(path, config)

    with p.open("w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=table.columns, lineterminator="\n")
        writer.writeheader()
        for row in table.rows:
            writer.writerow({k: _csv_cell(v) for k, v in row.items()})
    return p


def export_json(
    table: Table,
    path: str | Path,
    config: Optional[ExportConfig] = None,
) -> Path:
    """Escribe las filas como lista JSON (valores no finitos -> null)."""
    p = _prepare_target(path, config)

    rows = [{k: _json_cell(row[k]) for k in table.columns} for row in table.rows]
    with p.open("w", encoding="utf-8") as f:
        json.dump(rows, f, indent=2)
        f.write("\n")
    return p


def export_parquet(
    table: Table,
    path: str | Path,
    config: Optional[ExportConfig] = None,
    engine: Optional[str] = None,
) -> Path:
    """
    Escribe Parquet usando pandas.

    - Si engine es None -> se deja que pandas use el modo 'auto'.
    - Si engine es "pyarrow" o "fastparquet", se pasa explícitamente.
    """
    p = _prepare_target(path, config)

    kwargs: dict[str, Any] = {}
    if engine is not None:
        kwargs["engine"] = engine

    table.to_frame().to_parquet(p, **kwargs)
    return p


# ---------------------------------------------------------------------------
# API de alto nivel usada por la CLI
# ---------------------------------------------------------------------------


def export_table(
    table: Table,
    path: str | Path,
    fmt: str = "csv",
    config: Optional[ExportConfig] = None,
) -> Path:
    """Despacha al exportador del formato pedido ("csv", "json", "parquet") y devuelve la ruta escrita."""
    if fmt == "csv":
        return export_csv(table, path, config=config)
    if fmt == "json":
        return export_json(table, path, config=config)
    if fmt == "parquet":
        return export_parquet(table, path, config=config)
    raise ValueError(f"Unsupported export format: {fmt!r}")


__all__ = [
    "EXPORT_FORMATS",
    "ExportConfig",
    "export_csv",
    "export_json",
    "export_parquet",
    "export_table",
]
