"""Run configuration files (JSON).

Three graph forms are accepted under ``"graph"``::

    {"preset": "complete", "J": -1, "h": 1}
    {"preset": "complete", "coupling_vector": [-1, -0.5, -1, -1, -0.5, -1], "h": 1}
    {"n_sites": 4, "edges": [[1, 2, -1], ...], "fields": [1, 1, 1, 1]}
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .anneal import SweepConfig
from .errors import AnnealError, ConfigError
from .graph import PRESET_ORDER, SpinGraph, from_coupling_vector, preset_topology
from .operators import ModelSpec

TOP_KEYS = {"graph", "model", "sweep", "out"}
MODEL_KEYS = {"model", "trigger", "trigger_strength"}
SWEEP_KEYS = {
    "lambda_points",
    "partitions",
    "degeneracy_rel_tol",
    "refine_gap",
    "refine_tol",
    "entropy_base",
    "fidelity_target",
}
GRAPH_FORMS = {
    "preset": {"preset", "J", "h"},
    "vector": {"preset", "coupling_vector", "h"},
    "inline": {"n_sites", "edges", "fields"},
}


@dataclass(frozen=True)
class RunConfig:
    graph_form: str
    graph_section: dict
    graph: SpinGraph
    model: ModelSpec
    sweep: SweepConfig
    out: Optional[str] = None

    def to_dict(self) -> dict:
        """Echo of everything that determines the results (output path excluded)."""
        return {
            "graph": self.graph_section,
            "model": self.model.to_dict(),
            "sweep": sweep_to_dict(self.sweep),
        }


def sweep_to_dict(cfg: SweepConfig) -> dict:
    return {
        "lambda_points": cfg.lambda_points,
        "partitions": [p.label for p in cfg.partitions],
        "degeneracy_rel_tol": cfg.degeneracy_rel_tol,
        "refine_gap": cfg.refine_gap,
        "refine_tol": cfg.refine_tol,
        "entropy_base": cfg.entropy_base,
        "fidelity_target": cfg.fidelity_target,
    }


def _check_keys(section: dict, allowed: set, where: str, strict: bool):
    if not isinstance(section, dict):
        raise ConfigError(f"{where}: expected a JSON object")
    unknown = sorted(set(section) - allowed)
    if unknown and strict:
        raise ConfigError(f"{where}: unknown key(s) {unknown}; allowed: {sorted(allowed)}")


def _number(section: dict, key: str, where: str) -> float:
    if key not in section:
        raise ConfigError(f"{where}.{key}: required")
    value = section[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ConfigError(f"{where}.{key}: expected a finite number, got {value!r}")
    return float(value)


def _fields(section: dict, where: str):
    value = section.get("h")
    if isinstance(value, list):
        if not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value):
            raise ConfigError(f"{where}.h: expected numbers")
        return [float(x) for x in value]
    return _number(section, "h", where)


def parse_graph(section: dict, strict: bool = True) -> tuple[str, dict, SpinGraph]:
    """Return ``(form, normalized section, graph)``."""
    where = "graph"
    if not isinstance(section, dict):
        raise ConfigError(f"{where}: expected a JSON object")
    has_preset = "preset" in section
    has_inline = bool({"n_sites", "edges", "fields"} & set(section))
    if has_preset == has_inline:
        raise ConfigError(
            f"{where}: give exactly one of a preset ('preset' + 'J' or 'coupling_vector' + 'h') "
            "or an inline graph ('n_sites', 'edges', 'fields')"
        )
    try:
        if has_inline:
            _check_keys(section, GRAPH_FORMS["inline"], where, strict)
            missing = sorted(GRAPH_FORMS["inline"] - set(section))
            if missing:
                raise ConfigError(f"{where}: missing key(s) {missing}")
            graph = SpinGraph.from_dict({k: section[k] for k in ("n_sites", "edges", "fields")})
            return "inline", graph.to_dict(), graph

        name = section["preset"]
        if name not in PRESET_ORDER:
            raise ConfigError(
                f"{where}.preset: unknown preset {name!r}; valid presets: {', '.join(PRESET_ORDER)}"
            )
        if ("J" in section) == ("coupling_vector" in section):
            raise ConfigError(f"{where}: give exactly one of 'J' or 'coupling_vector'")
        if "J" in section:
            _check_keys(section, GRAPH_FORMS["preset"], where, strict)
            J, h = _number(section, "J", where), _number(section, "h", where)
            return "preset", {"preset": name, "J": J, "h": h}, preset_topology(name, J, h)
        _check_keys(section, GRAPH_FORMS["vector"], where, strict)
        vec = section["coupling_vector"]
        if not isinstance(vec, list) or not all(
            isinstance(x, (int, float)) and not isinstance(x, bool) for x in vec
        ):
            raise ConfigError(f"{where}.coupling_vector: expected a list of numbers")
        vec = [float(x) for x in vec]
        h = _fields(section, where)
        graph = from_coupling_vector(name, vec, h)
        return "vector", {"preset": name, "coupling_vector": vec, "h": h}, graph
    except ConfigError:
        raise
    except (AnnealError, TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def parse_config(data: dict, strict: bool = True) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    _check_keys(data, TOP_KEYS, "config", strict)
    if "graph" not in data:
        raise ConfigError("graph: required")
    form, section, graph = parse_graph(data["graph"], strict)
    if "model" not in data:
        raise ConfigError("model: required")

    model = data["model"]
    _check_keys(model, MODEL_KEYS, "model", strict)
    if "model" not in model:
        raise ConfigError("model.model: required")
    try:
        spec = ModelSpec(
            model=model["model"],
            trigger=model.get("trigger", "none"),
            trigger_strength=model.get("trigger_strength"),
        )
    except AnnealError as exc:
        raise ConfigError(f"model: {exc}") from exc

    sweep = data.get("sweep", {})
    _check_keys(sweep, SWEEP_KEYS, "sweep", strict)
    try:
        cfg = SweepConfig(**{k: v for k, v in sweep.items() if k in SWEEP_KEYS})
    except (AnnealError, TypeError, ValueError) as exc:
        raise ConfigError(f"sweep: {exc}") from exc

    out = data.get("out")
    if out is not None and not isinstance(out, str):
        raise ConfigError("out: expected a path string")
    return RunConfig(form, section, graph, spec, cfg, out)


def load_config(path, strict: bool = True) -> RunConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from exc
    return parse_config(data, strict)
