"""Command-line entry point: ``spinanneal {run,compare,presets}``."""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .anneal import entropy_column, run_sweep, summarize
from .config import RunConfig, load_config
from .errors import AnnealError, ConfigError
from .graph import PRESET_ORDER, format_edges, from_coupling_vector, preset_topology, project_coupling_vector
from .output import emit_plot_data, write_results, write_summary


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_help(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinanneal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    run = sub.add_parser("run", help="sweep one configuration")
    compare = sub.add_parser("compare", help="sweep one configuration on all four presets")
    for p in (run, compare):
        p.add_argument("--config", required=True, help="JSON run configuration")
        p.add_argument("--out", help="output directory (overrides 'out' in the config)")
        p.add_argument("--lambda-points", type=int, help="override sweep.lambda_points")
        p.add_argument("--workers", type=int, default=None, help="threads for the lambda sweep")
    compare.add_argument(
        "--merit",
        action="append",
        help="merit column to emit plot data for (repeatable; default: all)",
    )
    sub.add_parser("presets", help="print the preset edge sets")
    return parser


def _prepare(args) -> tuple[RunConfig, Path]:
    cfg = load_config(args.config)
    if args.lambda_points is not None:
        try:
            sweep = dataclasses.replace(cfg.sweep, lambda_points=args.lambda_points)
        except AnnealError as exc:
            raise ConfigError(f"--lambda-points: {exc}") from exc
        cfg = dataclasses.replace(cfg, sweep=sweep)
    out = args.out or cfg.out
    if not out:
        raise ConfigError("no output directory: pass --out or set 'out' in the config")
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    return cfg, out


def _cmd_run(args) -> int:
    cfg, out = _prepare(args)
    result = run_sweep(cfg.graph, cfg.model, cfg.sweep, workers=args.workers)
    write_results(result, out / "results.csv")
    summary = write_summary(result, out / "summary.json")
    print(
        f"min gap {summary['min_gap']['gap']:.6g} at lambda {summary['min_gap']['lambda']:.6g}; "
        f"mean fidelity {summary['mean_fidelity']:.6g}"
    )
    return 0


def _preset_graph(cfg: RunConfig, name: str):
    section = cfg.graph_section
    if cfg.graph_form == "preset":
        return preset_topology(name, section["J"], section["h"])
    if cfg.graph_form == "vector":
        return from_coupling_vector(name, project_coupling_vector(name, section["coupling_vector"]), section["h"])
    raise ConfigError("compare needs a preset graph form ('preset' with 'J' or 'coupling_vector')")


def _cmd_compare(args) -> int:
    cfg, out = _prepare(args)
    results = []
    summaries = {}
    for name in PRESET_ORDER:
        result = run_sweep(_preset_graph(cfg, name), cfg.model, cfg.sweep, workers=args.workers)
        write_results(result, out / f"results_{name}.csv")
        summaries[name] = summarize(result)
        results.append((name, result))
        print(f"{name}: min gap {result.min_gap[1]:.6g} at lambda {result.min_gap[0]:.6g}")
    merit_names = args.merit or (
        ["gap"]
        + [entropy_column(p) for p in cfg.sweep.partitions]
        + ["magnetization", "coherence_l1", "fidelity"]
    )
    for merit in merit_names:
        emit_plot_data(results, merit, out / f"plot_{merit}.dat")
    (out / "summary.json").write_text(json.dumps(summaries, indent=2) + "\n", encoding="utf-8")
    return 0


def _cmd_presets(args) -> int:
    for name in PRESET_ORDER:
        print(f"{name}: {format_edges(name)}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {"run": _cmd_run, "compare": _cmd_compare, "presets": _cmd_presets}[args.command]
    try:
        return handler(args)
    except (AnnealError, OSError) as exc:
        print(f"spinanneal: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
