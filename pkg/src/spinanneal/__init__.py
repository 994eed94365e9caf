"""Exact-diagonalization study of quantum annealing on small spin networks."""

__version__ = "0.1.0"

from .errors import AnnealError, ConfigError, NumericalError, ValidationError  # noqa: E402
from .graph import SpinGraph, from_coupling_vector, preset_topology  # noqa: E402
from .operators import (  # noqa: E402
    ModelSpec,
    build_driver,
    build_target,
    build_trigger,
    interpolate,
    site_operator,
)
from .spectrum import diagonalize, energy_gap, ground_degeneracy, refine_min_gap  # noqa: E402
from .merits import (  # noqa: E402
    Bipartition,
    coherence_l1,
    entanglement_entropy,
    fidelity,
    fidelity_to_subspace,
    mean_magnetization,
)
from .anneal import SweepConfig, SweepResult, run_sweep, summarize  # noqa: E402
