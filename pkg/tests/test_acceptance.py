"""Acceptance criteria for the annealing study, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get the PASS/FAIL table in the
terminal summary.
"""
import itertools

import numpy as np

import test_properties as props
from spinanneal.anneal import SweepConfig, run_sweep, summarize
from spinanneal.graph import PRESET_ORDER, from_coupling_vector, preset_topology
from spinanneal.operators import ModelSpec

BY_EDGES = ("chain", "square", "chain_loops", "complete")  # 3, 4, 5, 6 edges


def mean_fidelity(result):
    return summarize(result)["mean_fidelity"]


def peak_entropy_22(result):
    return summarize(result)["peak_entropy"]["entropy_2_2"]["value"]


def fmt(values):
    return ", ".join(f"{k}={v:.4g}" for k, v in values.items())


def test_c01_ising_terminal_state(sweep_cache, acceptance):
    last = sweep_cache("complete", "ising").records[-1]
    ok = (
        last.lam == 1.0
        and abs(last.fidelity - 1) <= 1e-10
        and abs(last.magnetization + 1) <= 1e-10
        and max(last.entropies) < 1e-10
        and last.coherence_l1 < 1e-10
    )
    acceptance(1, "Ising complete graph ends in |1111>", ok,
               f"F={last.fidelity:.12f} m={last.magnetization:.12f} "
               f"S_max={max(last.entropies):.2e} C={last.coherence_l1:.2e}")


def test_c02_driver_boundary(sweep_cache, acceptance):
    bad = []
    for model, preset in itertools.product(("ising", "xy", "dm"), PRESET_ORDER):
        r = sweep_cache(preset, model).records[0]
        if not (r.lam == 0.0 and abs(r.gap - 2) <= 1e-10 and abs(r.coherence_l1 - 15) <= 1e-8
                and abs(r.magnetization) <= 1e-10):
            bad.append(f"{model}/{preset}")
    acceptance(2, "lambda=0 gap 2, coherence 15, magnetization 0 (12 runs)", not bad,
               "all 12 runs match" if not bad else f"mismatch: {bad}")


def test_c03_ising_adiabatic(sweep_cache, acceptance):
    gaps = {p: sweep_cache(p, "ising").min_gap[1] for p in PRESET_ORDER}
    acceptance(3, "Ising refined min gap > 0.1", all(g > 0.1 for g in gaps.values()), fmt(gaps))


def test_c04_ising_entropy_edge_order(sweep_cache, acceptance):
    peaks = {p: peak_entropy_22(sweep_cache(p, "ising")) for p in BY_EDGES}
    ok = all(peaks[a] < peaks[b] for a, b in itertools.combinations(BY_EDGES, 2))
    acceptance(4, "Ising peak 2|2 entropy grows with edge count", ok, fmt(peaks))


def test_c05_ising_complete_best_fidelity(sweep_cache, acceptance):
    fids = {p: mean_fidelity(sweep_cache(p, "ising")) for p in PRESET_ORDER}
    ok = all(fids["complete"] > fids[p] for p in PRESET_ORDER if p != "complete")
    acceptance(5, "Ising complete graph has highest mean fidelity", ok, fmt(fids))


def test_c06_xy_inefficient(sweep_cache, acceptance):
    ising = {p: mean_fidelity(sweep_cache(p, "ising")) for p in PRESET_ORDER}
    xy = {p: mean_fidelity(sweep_cache(p, "xy")) for p in PRESET_ORDER}
    ok = all(xy[p] < ising[p] for p in PRESET_ORDER) and min(xy, key=xy.get) == "complete"
    # context only: the complete-graph XY target ground space is degenerate;
    # overlap with a single solver-chosen ground vector is reported alongside
    single = mean_fidelity(run_sweep(preset_topology("complete", -1, 1), ModelSpec("xy"),
                                     SweepConfig(fidelity_target="lowest")))
    acceptance(6, "XY mean fidelity below Ising, complete worst", ok,
               "xy: " + fmt(xy) + "; ising: " + fmt(ising)
               + f"; xy complete vs single ground vector={single:.4g}")


def test_c07_dm_gap_collapse(sweep_cache, acceptance):
    gaps = {p: sweep_cache(p, "dm").min_gap[1] for p in PRESET_ORDER}
    ok = gaps["square"] < 1e-6 and gaps["complete"] < 1e-6 \
        and gaps["chain"] > 1e-3 and gaps["chain_loops"] > 1e-3
    acceptance(7, "DM: square/complete gap < 1e-6, chains > 1e-3", ok, fmt(gaps))


def test_c08_dm_xx_trigger(sweep_cache, acceptance):
    base = {p: sweep_cache(p, "dm").min_gap[1] for p in PRESET_ORDER}
    trig = {p: sweep_cache(p, "dm", "xx").min_gap[1] for p in PRESET_ORDER}
    ok = trig["square"] < 1e-6 and trig["complete"] < 1e-6 \
        and trig["chain"] > base["chain"] and trig["chain_loops"] > base["chain_loops"]
    acceptance(8, "DM + xx trigger: square/complete stay < 1e-6, chains lifted", ok,
               "xx: " + fmt(trig) + "; none: " + fmt(base))


def test_c09_dm_yy_trigger(sweep_cache, acceptance):
    gap = sweep_cache("complete", "dm", "yy").min_gap[1]
    acceptance(9, "DM + yy trigger lifts complete-graph gap > 1e-3", gap > 1e-3, f"complete={gap:.4g}")


def test_c10_dm_weak_coupling(sweep_cache, acceptance):
    gaps = {p: sweep_cache(p, "dm", J=-0.5).min_gap[1] for p in ("square", "complete")}
    acceptance(10, "DM at J=-0.5: square/complete gap > 1e-3", all(g > 1e-3 for g in gaps.values()),
               fmt(gaps))


def test_c11_ising_inhomogeneity(sweep_cache, acceptance):
    spec = ModelSpec("ising")
    fids = {"homogeneous": mean_fidelity(sweep_cache("complete", "ising"))}
    for label, vec in (("mild", [-1, -0.5, -1, -1, -0.5, -1]), ("strong", [-0.5, -0.2, -0.5, -1, -0.5, -1])):
        fids[label] = mean_fidelity(run_sweep(from_coupling_vector("complete", vec, [1, 1, 1, 1]), spec))
    ok = fids["homogeneous"] > fids["mild"] > fids["strong"]
    acceptance(11, "Ising inhomogeneity lowers mean fidelity monotonically", ok, fmt(fids))


PROPERTY_SUITES = [
    props.test_every_operator_is_hermitian,
    props.test_eigen_reconstruction,
    props.test_ising_spectrum_is_classical_enumeration,
    props.test_entropy_partition_symmetry_and_bounds,
    props.test_coherence_identity,
    props.test_merits_phase_invariant,
    props.test_dm_both_orderings_cancel,
    props.test_parallel_sweep_equals_sequential,
]


def test_c12_property_suites(acceptance):
    failed = []
    for suite in PROPERTY_SUITES:
        try:
            suite()
        except Exception as exc:  # noqa: BLE001 - any failure marks the suite red
            failed.append(f"{suite.__name__}: {type(exc).__name__}")
    acceptance(12, "randomized property suites", not failed,
               f"{len(PROPERTY_SUITES)} suites passed" if not failed else "; ".join(failed))
