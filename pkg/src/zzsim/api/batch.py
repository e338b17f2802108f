"""
zzsim.api.batch

Ejecutor batch de varias configuraciones independientes.

- Ejecuta casos en secuencia o con un multiprocessing.Pool ligero.
- Un fallo en un caso no detiene al resto: queda registrado en su BatchResult.
"""

from __future__ import annotations

import multiprocessing as mp
from dataclasses import dataclass
from typing import Any, List, Mapping, Optional

from zzsim.api.tasks import TaskResult, run_from_mapping


@dataclass
class BatchCase:
    """
    Un caso batch unitario:

    - id : identificador libre
    - config : dict de configuración (mismo esquema que la CLI)
    - task : tarea; si es None se usa la clave "task" del config
    """

    id: str
    config: Mapping[str, Any]
    task: Optional[str] = None


@dataclass
class BatchResult:
    id: str
    ok: bool
    data: Optional[TaskResult]
    error: Optional[str]


def _run_single_case(case: BatchCase) -> BatchResult:
    try:
        result = run_from_mapping(case.config, case.task)
        return BatchResult(id=case.id, ok=True, data=result, error=None)
    except Exception as e:
        return BatchResult(id=case.id, ok=False, data=None, error=str(e))


# ---------------------------------------------------------------------
# API pública batch
# ---------------------------------------------------------------------

def run_batch(
    cases: List[BatchCase],
    parallel: bool = False,
    max_workers: int = 4,
) -> List[BatchResult]:
    """
    Ejecuta un conjunto de casos batch.

    Returns
    -------
    list[BatchResult]
        Un resultado por caso, en el mismo orden del input.
    """
    if not parallel:
        return [_run_single_case(case) for case in cases]

    with mp.Pool(processes=max_workers) as pool:
        results = pool.map(_run_single_case, cases)
    return results
