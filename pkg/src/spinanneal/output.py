"""Result tables (CSV), summaries (JSON) and plot-data blocks."""
from __future__ import annotations

import json
import math
from datetime import datetime, timezone
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import __version__
from .anneal import SweepResult, entropy_column, summarize
from .config import sweep_to_dict
from .errors import AnnealError, ValidationError

SIG_DIGITS = 12


def format_float(x: float) -> str:
    """12 significant digits; scientific when |x| < 1e-4 or |x| >= 1e6."""
    x = float(x)
    if not math.isfinite(x):
        return repr(x)
    if x == 0.0:
        return "0." + "0" * (SIG_DIGITS - 1)
    sci = f"{x:.{SIG_DIGITS - 1}e}"
    rounded = abs(float(sci))
    if rounded < 1e-4 or rounded >= 1e6:
        return sci
    exponent = int(sci.split("e")[1])
    return f"{x:.{SIG_DIGITS - 1 - exponent}f}"


def columns(result: SweepResult) -> list[str]:
    return (
        ["lambda", "E0", "E1", "gap", "ground_degeneracy"]
        + [entropy_column(p) for p in result.config.partitions]
        + ["magnetization", "coherence_l1", "fidelity"]
    )


def config_echo(result: SweepResult) -> dict:
    """Config that reproduces ``result``; the graph is written inline."""
    return {
        "graph": result.graph.to_dict(),
        "model": result.spec.to_dict(),
        "sweep": sweep_to_dict(result.config),
    }


def _row(record) -> str:
    cells = [format_float(v) for v in (record.lam, record.E0, record.E1, record.gap)]
    cells.append(str(int(record.ground_degeneracy)))
    cells += [format_float(s) for s in record.entropies]
    cells += [format_float(v) for v in (record.magnetization, record.coherence_l1, record.fidelity)]
    return ",".join(cells)


def render_results(result: SweepResult, timestamp: Optional[str] = None) -> str:
    if not result.records:
        raise ValidationError("refusing to write a result table without records")
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    lam_star, gap_star = result.min_gap
    lines = [
        f"# spinanneal {__version__}",
        f"# timestamp: {timestamp}",
        "# config: " + json.dumps(config_echo(result), sort_keys=True, separators=(",", ":")),
        f"# target_ground_energy: {format_float(result.target_ground_energy)}",
        f"# target_ground_degeneracy: {result.target_ground_degeneracy}",
        f"# min_gap: {format_float(gap_star)} at lambda {format_float(lam_star)}",
        ",".join(columns(result)),
    ]
    lines += [_row(r) for r in result.records]
    return "\n".join(lines) + "\n"


def write_results(result: SweepResult, path, timestamp: Optional[str] = None) -> None:
    text = render_results(result, timestamp)
    try:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise AnnealError(f"cannot write results to {path}: {exc}") from exc


def read_config_echo(path) -> dict:
    """Pull the ``# config:`` header back out of a results CSV."""
    prefix = "# config: "
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.startswith(prefix):
                return json.loads(line[len(prefix):])
            if not line.startswith("#"):
                break
    raise ValidationError(f"{path} has no config header")


def write_summary(result: SweepResult, path) -> dict:
    summary = summarize(result)
    try:
        Path(path).write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    except OSError as exc:
        raise AnnealError(f"cannot write summary to {path}: {exc}") from exc
    return summary


def emit_plot_data(results: Sequence[tuple[str, SweepResult]], merit: str, path) -> None:
    """One ``lambda value`` block per labeled result, blocks separated by two
    blank lines (gnuplot ``index`` friendly)."""
    if not results:
        raise ValidationError("no results to emit")
    valid = [c for c in columns(results[0][1]) if c != "lambda"]
    if merit not in valid:
        raise ValidationError(f"unknown merit {merit!r}; valid columns: {', '.join(valid)}")
    grid = results[0][1].column("lambda")
    blocks = []
    for label, result in results:
        lam = result.column("lambda")
        if lam.shape != grid.shape or not np.array_equal(lam, grid):
            raise ValidationError(f"result {label!r} uses a different lambda grid")
        if merit not in columns(result):
            raise ValidationError(f"result {label!r} has no column {merit!r}")
        values = result.column(merit)
        lines = [f"# {label}", f"# lambda {merit}"]
        lines += [f"{format_float(l)} {format_float(v)}" for l, v in zip(lam, values)]
        blocks.append("\n".join(lines))
    try:
        Path(path).write_text("\n\n\n".join(blocks) + "\n", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise AnnealError(f"cannot write plot data to {path}: {exc}") from exc
