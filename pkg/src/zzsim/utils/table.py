"""
zzsim.utils.table

Tabla rectangular mínima: nombres de columna ordenados + filas (dicts).

Es el formato de intercambio entre los barridos (spectrum, optimize,
dynamics) y la salida (exporter, cli.svg).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

import pandas as pd


@dataclass
class Table:
    columns: list[str]
    rows: list[dict[str, Any]] = field(default_factory=list)

    def append(self, row: Mapping[str, Any]) -> None:
        """Añade una fila; las claves deben coincidir con las columnas."""
        missing = [c for c in self.columns if c not in row]
        extra = [k for k in row if k not in self.columns]
        if missing or extra:
            raise ValueError(
                f"Row keys do not match table columns (missing={missing}, extra={extra})"
            )
        self.rows.append({c: row[c] for c in self.columns})

    def extend(self, rows: Iterable[Mapping[str, Any]]) -> None:
        for row in rows:
            self.append(row)

    def column(self, name: str) -> list[Any]:
        if name not in self.columns:
            raise KeyError(name)
        return [row[name] for row in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    def to_frame(self) -> pd.DataFrame:
        """DataFrame de pandas con las columnas en el orden declarado."""
        return pd.DataFrame(self.rows, columns=self.columns)
