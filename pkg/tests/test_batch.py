"""
Tests para zzsim.api.batch

No se ejecuta física real:
- Se monkeypatchea run_from_mapping para simular resultados
- Se validan secuencial y paralelo
"""

from __future__ import annotations

from zzsim.api.batch import BatchCase, BatchResult, run_batch
from zzsim.api.tasks import TaskResult
from zzsim.utils.table import Table


def _fake_result(task):
    return TaskResult(task or "zz", Table(columns=["x"], rows=[{"x": 1.0}]), "ok")


def test_batch_sequential(monkeypatch):
    """
    Verifica:
    - run_batch() secuencial ejecuta todos los casos en orden
    - pasa config y tarea de cada caso
    - produce BatchResult por caso
    """
    captured = []

    def fake_run_from_mapping(config, task=None):
        captured.append((config, task))
        return _fake_result(task)

    monkeypatch.setattr("zzsim.api.batch.run_from_mapping", fake_run_from_mapping)

    cases = [
        BatchCase(id="A", config={"device": {"a": 1}}, task="zz"),
        BatchCase(id="B", config={"task": "spectrum", "device": {"b": 2}}),
    ]
    results = run_batch(cases, parallel=False)

    assert [r.id for r in results] == ["A", "B"]
    assert all(r.ok for r in results)
    assert results[0].data.task == "zz"
    assert captured[0] == ({"device": {"a": 1}}, "zz")
    assert captured[1][1] is None


def test_batch_failure(monkeypatch):
    """
    Verifica que si un caso falla, produce BatchResult(ok=False) y el resto sigue.
    """
    def fake_run_from_mapping(config, task=None):
        if config.get("fail"):
            raise RuntimeError("boom")
        return _fake_result(task)

    monkeypatch.setattr("zzsim.api.batch.run_from_mapping", fake_run_from_mapping)

    results = run_batch([BatchCase("F", {"fail": True}, "zz"), BatchCase("G", {}, "zz")])

    assert results[0].ok is False
    assert results[0].error == "boom"
    assert results[0].data is None
    assert results[1].ok is True


def test_batch_real_config_error():
    """Sin monkeypatch: una configuración inválida queda registrada como error."""
    results = run_batch([BatchCase("bad", {"device": {}}, "zz")])
    assert results[0].ok is False
    assert "device.mode_a" in results[0].error


def test_batch_parallel(monkeypatch):
    """
    Verifica la ruta paralela (multiprocessing).
    Para evitar overhead, se simula con una función trivial.
    """
    monkeypatch.setattr("zzsim.api.batch.run_from_mapping", lambda config, task=None: _fake_result(task))

    cases = [BatchCase(id=str(i), config={}, task="zz") for i in range(4)]

    # Parallel=True, pero pequeño -> debe devolver 4 resultados
    results = run_batch(cases, parallel=True, max_workers=2)

    assert len(results) == 4
    assert all(isinstance(r, BatchResult) for r in results)
