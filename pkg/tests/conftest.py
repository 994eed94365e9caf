import itertools

import numpy as np
import pytest

from spinanneal.graph import PRESET_ORDER, preset_topology
from spinanneal.operators import ModelSpec
from spinanneal.anneal import run_sweep, summarize


def classical_energies(graph):
    """Brute-force Ising energies, indexed like the computational basis."""
    n = graph.n_sites
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        s = [1 - 2 * b for b in bits]
        e = sum(J * s[i] * s[j] for i, j, J in graph.edges)
        e += sum(h * s[i] for i, h in enumerate(graph.fields))
        out.append(e)
    return np.array(out, dtype=float)


def random_state(rng, dim):
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


@pytest.fixture(scope="session")
def sweep_cache():
    """Memoized run_sweep keyed by (preset, model, trigger, J)."""
    cache = {}

    def get(preset, model, trigger="none", J=-1.0, h=1.0):
        key = (preset, model, trigger, J, h)
        if key not in cache:
            spec = ModelSpec(model, trigger)
            cache[key] = run_sweep(preset_topology(preset, J, h), spec)
        return cache[key]

    return get


@pytest.fixture
def rng():
    return np.random.default_rng(20240617)


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def record(number, title, passed, detail):
        status = "PASS" if passed else "FAIL"
        _ACCEPTANCE_LINES.append((number, f"[{status}] criterion {number:>2}: {title} -- {detail}"))
        assert passed, f"criterion {number} ({title}) failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
