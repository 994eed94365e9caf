"""Dense Hamiltonians on 2**n dimensional spin Hilbert spaces.

Spin operators are bare Pauli matrices (eigenvalues +1/-1). Site 0 is the
leftmost Kronecker factor, so the basis index of a product state is the
bit string with site 0 as the most significant bit. ``|0>`` is the +1
eigenstate of sigma-z.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce
from typing import Optional

import numpy as np

from .errors import ConfigError, ValidationError
from .graph import SpinGraph

HERMITIAN_ATOL = 1e-12

PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_ID2 = np.eye(2, dtype=complex)


class Model(str, enum.Enum):
    ISING = "ising"
    XY = "xy"
    DM = "dm"


class Trigger(str, enum.Enum):
    NONE = "none"
    XX = "xx"
    YY = "yy"


DEFAULT_TRIGGER_STRENGTH = 2.0


def _enum(cls, value, what):
    try:
        return cls(value)
    except ValueError:
        valid = ", ".join(m.value for m in cls)
        raise ConfigError(f"unknown {what} {value!r}; valid: {valid}") from None


@dataclass(frozen=True)
class ModelSpec:
    """Target model plus optional trigger term.

    ``trigger_strength`` defaults to 2 when a trigger is requested and must
    be zero or absent without one.
    """

    model: Model
    trigger: Trigger = Trigger.NONE
    trigger_strength: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "model", _enum(Model, self.model, "model"))
        object.__setattr__(self, "trigger", _enum(Trigger, self.trigger, "trigger"))
        g = self.trigger_strength
        if self.trigger is Trigger.NONE:
            if g not in (None, 0, 0.0):
                raise ConfigError("trigger_strength given but trigger is 'none'")
            object.__setattr__(self, "trigger_strength", None)
        else:
            g = DEFAULT_TRIGGER_STRENGTH if g is None else float(g)
            if not math.isfinite(g):
                raise ConfigError("trigger_strength must be finite")
            object.__setattr__(self, "trigger_strength", g)

    def to_dict(self) -> dict:
        return {
            "model": self.model.value,
            "trigger": self.trigger.value,
            "trigger_strength": self.trigger_strength,
        }


def check_hermitian(h: np.ndarray, atol: float = HERMITIAN_ATOL) -> np.ndarray:
    """Return ``h`` as a complex array after checking shape and Hermiticity."""
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValidationError(f"operator must be square, got shape {h.shape}")
    dim = h.shape[0]
    if dim < 1 or dim & (dim - 1):
        raise ValidationError(f"operator dimension {dim} is not a power of two")
    dev = np.max(np.abs(h - h.conj().T))
    if not dev <= atol:
        raise ValidationError(f"operator is not Hermitian (max |H - H^dag| = {dev:.3e})")
    return h


def site_operator(axis: str, site: int, n_sites: int) -> np.ndarray:
    """Pauli matrix ``axis`` acting on ``site`` (0-based), identity elsewhere."""
    if axis not in PAULI:
        raise ValidationError(f"axis must be one of x, y, z, got {axis!r}")
    if not 0 <= site < n_sites:
        raise ValidationError(f"site {site} out of range for {n_sites} sites")
    factors = [_ID2] * n_sites
    factors[site] = PAULI[axis]
    return reduce(np.kron, factors)


def _pair(a: str, i: int, b: str, j: int, n: int) -> np.ndarray:
    factors = [_ID2] * n
    factors[i] = PAULI[a]
    factors[j] = PAULI[b]
    return reduce(np.kron, factors)


def build_driver(n_sites: int) -> np.ndarray:
    """Transverse-field driver ``-sum_i X_i``."""
    if n_sites < 1:
        raise ValidationError("n_sites must be >= 1")
    return -sum(site_operator("x", i, n_sites) for i in range(n_sites))


def _field_term(graph: SpinGraph) -> np.ndarray:
    n = graph.n_sites
    h = np.zeros((2**n, 2**n), dtype=complex)
    for i, hi in enumerate(graph.fields):
        if hi:
            h += hi * site_operator("z", i, n)
    return h


def dm_pair(i: int, j: int, n_sites: int) -> np.ndarray:
    """Pairwise DM term ``Z_i X_j - X_i Z_j`` for the ordered pair (i, j)."""
    return _pair("z", i, "x", j, n_sites) - _pair("x", i, "z", j, n_sites)


def build_target(graph: SpinGraph, model) -> np.ndarray:
    """Problem Hamiltonian: pairwise model term on every edge plus z fields.

    Each undirected edge contributes once, with the DM term oriented from
    the lower to the higher site index.
    """
    model = _enum(Model, model, "model")
    n = graph.n_sites
    h = _field_term(graph)
    for i, j, J in graph.edges:
        if not J:
            continue
        if model is Model.ISING:
            h += J * _pair("z", i, "z", j, n)
        elif model is Model.XY:
            h += J * (_pair("x", i, "x", j, n) + _pair("y", i, "y", j, n))
        else:
            h += J * dm_pair(i, j, n)
    return h


def build_trigger(graph: SpinGraph, kind, g: float) -> np.ndarray:
    """``g * sum_edges J_ij P_i P_j`` with ``P`` = X (``xx``) or Y (``yy``)."""
    kind = _enum(Trigger, kind, "trigger")
    if kind is Trigger.NONE:
        raise ValidationError("build_trigger needs kind 'xx' or 'yy'")
    if not math.isfinite(g):
        raise ValidationError("trigger strength must be finite")
    axis = "x" if kind is Trigger.XX else "y"
    n = graph.n_sites
    h = np.zeros((2**n, 2**n), dtype=complex)
    for i, j, J in graph.edges:
        h += (g * J) * _pair(axis, i, axis, j, n)
    return h


def interpolate(h0: np.ndarray, h1: np.ndarray, ht: Optional[np.ndarray], lam: float) -> np.ndarray:
    """``lam*h1 + (1-lam)*h0 [+ lam*(1-lam)*ht]``; exact at both endpoints."""
    if not 0.0 <= lam <= 1.0:
        raise ValidationError(f"lambda must lie in [0, 1], got {lam}")
    if h0.shape != h1.shape or (ht is not None and ht.shape != h0.shape):
        raise ValidationError("operators have mismatched dimensions")
    if lam == 0.0:
        return np.array(h0, dtype=complex)
    if lam == 1.0:
        return np.array(h1, dtype=complex)
    h = lam * h1 + (1.0 - lam) * h0
    if ht is not None:
        h = h + (lam * (1.0 - lam)) * ht
    return h
