"""lambda sweeps of the interpolated Hamiltonian and their summaries."""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import merits
from .errors import AnnealError, ValidationError
from .graph import SpinGraph
from .merits import DEFAULT_PARTITIONS, Bipartition
from .operators import ModelSpec, Trigger, build_driver, build_target, build_trigger, interpolate
from .spectrum import (
    DEFAULT_DEGENERACY_TOL,
    diagonalize,
    energy_gap,
    ground_degeneracy,
    refine_min_gap,
)


FIDELITY_TARGETS = ("subspace", "lowest")


@dataclass(frozen=True)
class SweepConfig:
    lambda_points: int = 201
    partitions: tuple[Bipartition, ...] = DEFAULT_PARTITIONS
    degeneracy_rel_tol: float = DEFAULT_DEGENERACY_TOL
    refine_gap: bool = True
    refine_tol: float = 1e-6
    entropy_base: float = math.e
    # "subspace": weight in the whole degenerate target ground space;
    # "lowest": overlap with the solver's first ground vector only
    fidelity_target: str = "subspace"

    def __post_init__(self):
        if isinstance(self.lambda_points, bool) or int(self.lambda_points) != self.lambda_points \
                or self.lambda_points < 2:
            raise ValidationError(f"lambda_points must be an integer >= 2, got {self.lambda_points!r}")
        object.__setattr__(self, "lambda_points", int(self.lambda_points))
        parts = tuple(
            p if isinstance(p, Bipartition) else Bipartition.from_label(p) for p in self.partitions
        )
        if not parts:
            raise ValidationError("at least one partition is required")
        object.__setattr__(self, "partitions", parts)
        if not self.degeneracy_rel_tol > 0:
            raise ValidationError("degeneracy_rel_tol must be positive")
        if not self.refine_tol > 0:
            raise ValidationError("refine_tol must be positive")
        if not (self.entropy_base > 0 and self.entropy_base != 1):
            raise ValidationError("entropy_base must be positive and != 1")
        if self.fidelity_target not in FIDELITY_TARGETS:
            raise ValidationError(
                f"fidelity_target must be one of {', '.join(FIDELITY_TARGETS)}, "
                f"got {self.fidelity_target!r}"
            )

    @property
    def grid(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.lambda_points)


@dataclass(frozen=True)
class SweepRecord:
    lam: float
    E0: float
    E1: float
    gap: float
    ground_degeneracy: int
    entropies: tuple[float, ...]
    magnetization: float
    coherence_l1: float
    fidelity: float


@dataclass(frozen=True)
class SweepResult:
    records: list[SweepRecord]
    min_gap: tuple[float, float]
    target_ground_energy: float
    target_ground_degeneracy: int
    config: SweepConfig
    graph: SpinGraph
    spec: ModelSpec

    def column(self, name: str) -> np.ndarray:
        if name.startswith("entropy_"):
            labels = [entropy_column(p) for p in self.config.partitions]
            if name in labels:
                k = labels.index(name)
                return np.array([r.entropies[k] for r in self.records])
        attr = "lam" if name == "lambda" else name
        if attr not in SweepRecord.__dataclass_fields__ or attr == "entropies":
            raise ValidationError(f"unknown column {name!r}")
        return np.array([getattr(r, attr) for r in self.records], dtype=float)


def entropy_column(part: Bipartition) -> str:
    return "entropy_" + part.label.replace("|", "_").replace(",", "-")


class _Pipeline:
    """Fixed operators of one sweep; evaluates a single lambda point."""

    def __init__(self, graph: SpinGraph, spec: ModelSpec, cfg: SweepConfig):
        for part in cfg.partitions:
            if sorted(part.left + part.right) != list(range(graph.n_sites)):
                raise ValidationError(
                    f"partition {part.label} does not cover the {graph.n_sites} graph sites"
                )
        self.cfg = cfg
        self.h0 = build_driver(graph.n_sites)
        self.h1 = build_target(graph, spec.model)
        self.ht = None
        if spec.trigger is not Trigger.NONE:
            self.ht = build_trigger(graph, spec.trigger, spec.trigger_strength)
        target = diagonalize(self.h1)
        self.target_energy = float(target.energies[0])
        self.target_degeneracy = ground_degeneracy(target, cfg.degeneracy_rel_tol)
        if cfg.fidelity_target == "lowest":
            self.targets = target.states[:1]
        else:
            self.targets = target.states[: self.target_degeneracy]

    def hamiltonian(self, lam: float) -> np.ndarray:
        return interpolate(self.h0, self.h1, self.ht, lam)

    def gap(self, lam: float) -> float:
        e = np.linalg.eigvalsh(self.hamiltonian(lam))
        return max(0.0, float(e[1] - e[0]))

    def evaluate(self, lam: float) -> SweepRecord:
        try:
            es = diagonalize(self.hamiltonian(lam))
            psi = es.ground_state
            if len(self.targets) == 1:
                fid = merits.fidelity(psi, self.targets[0])
            else:
                fid = merits.fidelity_to_subspace(psi, self.targets)
            return SweepRecord(
                lam=float(lam),
                E0=float(es.energies[0]),
                E1=float(es.energies[1]),
                gap=energy_gap(es),
                ground_degeneracy=ground_degeneracy(es, self.cfg.degeneracy_rel_tol),
                entropies=tuple(
                    merits.entanglement_entropy(psi, p, self.cfg.entropy_base)
                    for p in self.cfg.partitions
                ),
                magnetization=merits.mean_magnetization(psi),
                coherence_l1=merits.coherence_l1(psi),
                fidelity=fid,
            )
        except AnnealError as exc:
            raise type(exc)(f"at lambda={lam!r}: {exc}") from exc


def run_sweep(
    graph: SpinGraph,
    spec: ModelSpec,
    cfg: Optional[SweepConfig] = None,
    workers: Optional[int] = None,
) -> SweepResult:
    """Diagonalize H(lambda) on the grid and record every figure of merit.

    Fidelity is measured against the ground space of the target
    Hamiltonian (lambda = 1), computed once. With ``workers > 1`` grid
    points are evaluated on a thread pool; records are always returned in
    ascending lambda.
    """
    cfg = cfg or SweepConfig()
    pipe = _Pipeline(graph, spec, cfg)
    grid = cfg.grid
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(pipe.evaluate, grid))
    else:
        records = [pipe.evaluate(lam) for lam in grid]

    gaps = np.array([r.gap for r in records])
    k = int(np.argmin(gaps))
    best = (float(grid[k]), float(gaps[k]))
    if cfg.refine_gap and gaps[k] > 0.0:
        lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, len(grid) - 1)]
        lam_star, gap_star = refine_min_gap(pipe.gap, (lo, hi), cfg.refine_tol)
        if gap_star < best[1]:
            best = (lam_star, gap_star)

    return SweepResult(
        records=records,
        min_gap=best,
        target_ground_energy=pipe.target_energy,
        target_ground_degeneracy=pipe.target_degeneracy,
        config=cfg,
        graph=graph,
        spec=spec,
    )


def summarize(result: SweepResult) -> dict:
    """Headline numbers of a sweep as a JSON-ready dict."""
    if not result.records:
        raise ValidationError("cannot summarize an empty sweep")
    lam = result.column("lambda")
    fid = result.column("fidelity")
    mean_fid = float(np.trapezoid(fid, lam)) if len(lam) > 1 else float(fid[0])
    peaks = {}
    for k, part in enumerate(result.config.partitions):
        values = np.array([r.entropies[k] for r in result.records])
        i = int(np.argmax(values))
        peaks[entropy_column(part)] = {"lambda": float(lam[i]), "value": float(values[i])}
    last = result.records[-1]
    final = {
        "lambda": last.lam,
        "E0": last.E0,
        "E1": last.E1,
        "gap": last.gap,
        "ground_degeneracy": last.ground_degeneracy,
        **{entropy_column(p): s for p, s in zip(result.config.partitions, last.entropies)},
        "magnetization": last.magnetization,
        "coherence_l1": last.coherence_l1,
        "fidelity": last.fidelity,
    }
    return {
        "min_gap": {"lambda": result.min_gap[0], "gap": result.min_gap[1]},
        "mean_fidelity": mean_fid,
        "peak_entropy": peaks,
        "final": final,
        "target_ground_energy": result.target_ground_energy,
        "target_ground_degeneracy": result.target_ground_degeneracy,
    }
