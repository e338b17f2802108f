"""
CLI de zzsim.

    zzsim-cli <tarea> --config run.json [--out tabla.csv] [--format csv|json|parquet]
              [--svg figura.svg] [--threads N] [--seedless]
              [--log-level info] [--log-json]

Tareas: spectrum, zz, zz-sweep, gate, calibrate, asymmetry-sweep,
pulse-dump, hold-scan, population-dump.

Imprime un resumen de una línea en stdout; los logs van a stderr.

Códigos de salida:
    0 ok
    2 configuración inválida (o columnas SVG desconocidas / no numéricas)
    3 fallo numérico (error de zzsim o de numpy/scipy)
    4 error de E/S al escribir artefactos
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path
from typing import Optional

import numpy as np

from zzsim.api.tasks import TaskResult, run_task
from zzsim.errors import ConfigError, ZZSimError
from zzsim.io.run_config import TASKS, RunConfig, load_run_config, read_config_file
from zzsim.utils.config import ExportConfig
from zzsim.utils.exporter import EXPORT_FORMATS, export_csv, export_table
from zzsim.utils.logger import LOG_LEVELS, configure_global_logger_from_config, global_log
from zzsim.utils.table import Table

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


# ---------------------------------------------------------------------
# Utilidades internas
# ---------------------------------------------------------------------
def emit_csv(table: Table, path: str | Path) -> Path:
    """CSV con cabecera, floats a precisión completa y orden de filas estable."""
    return export_csv(table, path, config=ExportConfig(overwrite=True))


def _default_svg_columns(config: RunConfig, table: Table) -> tuple[str, list[str], bool, bool]:
    """(x, ys, log_y, abs_y) por defecto para cada tarea."""
    task = config.task
    if task in ("spectrum", "zz-sweep"):
        x = config.sweep.axes[0].parameter
        if task == "spectrum":
            return x, [c for c in table.columns if c.startswith("energy_")], False, False
        return x, ["zeta_numeric_mhz"], True, True
    if task == "zz":
        return "delta_mhz", ["zeta_numeric_mhz"], False, False
    if task == "asymmetry-sweep":
        return "delta_alpha_mhz", ["infidelity"], True, False
    if task == "pulse-dump":
        return "t_ns", ["freq_ghz"], False, False
    if task == "hold-scan":
        return "hold_ns", ["eps_leak", "eps_swap"], True, False
    if task == "population-dump":
        return "t_ns", ["p00", "p01", "p10", "p11", "p_non_logical"], False, False
    return "hold_ns", ["fidelity"], False, False


def _write_svg(config: RunConfig, table: Table, path: str) -> None:
    # matplotlib solo se importa si se pide una figura
    from zzsim.cli.svg import render_svg

    x, ys, log_y, abs_y = _default_svg_columns(config, table)
    svg = config.svg
    if svg.x is not None:
        x = svg.x
    if svg.y:
        ys, log_y, abs_y = list(svg.y), svg.log_y, svg.abs_y
    render_svg(table, x, ys, path, log_y=log_y, abs_y=abs_y)


def _write_outputs(config: RunConfig, result: TaskResult, args: argparse.Namespace) -> None:
    out_path = args.out or config.output.path
    fmt = args.format or config.output.format
    if out_path:
        if fmt == "csv":
            written = emit_csv(result.table, out_path)
        else:
            written = export_table(result.table, out_path, fmt, ExportConfig(overwrite=True))
        global_log("info", "table_written", path=str(written), format=fmt, rows=len(result.table))

    svg_path = args.svg or config.svg.path
    if svg_path:
        _write_svg(config, result.table, svg_path)
        global_log("info", "svg_written", path=str(svg_path))


# ---------------------------------------------------------------------
# Parser CLI
# ---------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="Archivo JSON de configuración.")
    common.add_argument("--out", default=None, help="Tabla de salida (sobrescribe output.path).")
    common.add_argument("--format", choices=EXPORT_FORMATS, default=None, help="Formato de la tabla.")
    common.add_argument("--svg", default=None, help="Figura SVG opcional.")
    common.add_argument("--threads", type=int, default=None, help="Procesos para barridos y calibraciones.")
    common.add_argument(
        "--seedless",
        action="store_true",
        help="Reservado: todas las ejecuciones son deterministas.",
    )
    common.add_argument("--log-level", choices=list(LOG_LEVELS), default=None, help="Nivel de logging global.")
    common.add_argument("--log-json", action="store_true", help="Emitir logs en formato JSON-lines.")

    parser = argparse.ArgumentParser(
        prog="zzsim-cli",
        description="Simulador de interacción ZZ entre dos qubits anarmónicos acoplados.",
    )
    sub = parser.add_subparsers(dest="task", required=True, metavar="task")
    for task in TASKS:
        sub.add_parser(task, parents=[common], help=f"Tarea {task}.")
    return parser


# ---------------------------------------------------------------------
# MAIN
# ---------------------------------------------------------------------
def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be >= 1")

    # 1) Configuración
    try:
        config = load_run_config(read_config_file(args.config), args.task)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    # 2) Logging global: los flags tienen prioridad sobre la sección "logging"
    log_cfg = {"log_level": "info", "log_json": False, **dict(config.logging)}
    if args.log_level is not None:
        log_cfg["log_level"] = args.log_level
    if args.log_json:
        log_cfg["log_json"] = True
    configure_global_logger_from_config(log_cfg)

    if args.threads is not None:
        config = replace(config, threads=args.threads)
    if args.seedless:
        global_log("debug", "seedless_flag", note="all runs are deterministic")

    # 3) Ejecución
    try:
        result = run_task(config)
    except ZZSimError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG if isinstance(exc, ConfigError) else EXIT_NUMERIC
    except (np.linalg.LinAlgError, ArithmeticError, ValueError) as exc:
        # numpy/scipy fuera de la jerarquía de zzsim
        global_log("error", "numeric_failure", error=type(exc).__name__, detail=str(exc))
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    # 4) Artefactos
    try:
        _write_outputs(config, result, args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO

    print(result.summary)
    return EXIT_OK


def run(argv: Optional[list[str]] = None) -> None:
    sys.exit(main(argv))


if __name__ == "__main__":
    run()
