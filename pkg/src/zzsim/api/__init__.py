"""
api: Ejecución de tareas y batch sobre configuraciones validadas.
"""

from .batch import BatchCase, BatchResult, run_batch
from .tasks import TaskResult, run_from_mapping, run_task

__all__ = ["BatchCase", "BatchResult", "run_batch", "TaskResult", "run_from_mapping", "run_task"]
