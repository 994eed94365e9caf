"""Exact diagonalization and energy-gap analysis."""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import NumericalError, ValidationError
from .operators import check_hermitian

DEFAULT_DEGENERACY_TOL = 1e-9
_PHASE_TIE_ATOL = 1e-12
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class EigenSystem:
    """Ascending energies; ``states[k]`` is the normalized eigenvector of ``energies[k]``."""

    energies: np.ndarray
    states: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.energies)

    @property
    def ground_state(self) -> np.ndarray:
        return self.states[0]


def fingerprint(h: np.ndarray) -> str:
    return hashlib.sha1(np.ascontiguousarray(h).tobytes()).hexdigest()[:12]


def fix_phase(vec: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the largest amplitude is real and positive.

    Amplitudes within 1e-12 of the maximum modulus count as tied; the lowest
    basis index among them wins.
    """
    vec = np.asarray(vec, dtype=complex)
    mags = np.abs(vec)
    k = int(np.flatnonzero(mags >= mags.max() - _PHASE_TIE_ATOL)[0])
    out = vec * (np.conj(vec[k]) / mags[k])
    out[k] = mags[k]
    return out


def diagonalize(h: np.ndarray) -> EigenSystem:
    h = check_hermitian(h)
    if not np.all(np.isfinite(h)):
        raise NumericalError(f"operator {fingerprint(h)} has non-finite entries")
    try:
        energies, vecs = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigensolver failed for operator {fingerprint(h)}: {exc}") from exc
    vecs = vecs / np.linalg.norm(vecs, axis=0)
    states = np.array([fix_phase(vecs[:, k]) for k in range(len(energies))])

    dim = len(energies)
    scale = max(1.0, float(np.max(np.abs(h))) * dim)
    resid = np.max(np.linalg.norm(h @ states.T - states.T * energies, axis=0))
    if not resid <= 1e-10 * scale:
        raise NumericalError(
            f"eigen residual {resid:.3e} too large for operator {fingerprint(h)}"
        )
    return EigenSystem(energies=energies, states=states)


def energy_gap(es: EigenSystem) -> float:
    """``E1 - E0``, clipped at zero against rounding."""
    if es.dim < 2:
        raise ValidationError("energy gap needs dimension >= 2")
    return max(0.0, float(es.energies[1] - es.energies[0]))


def ground_degeneracy(es: EigenSystem, rel_tol: float = DEFAULT_DEGENERACY_TOL) -> int:
    """Number of levels within ``rel_tol * max(1, spectral range)`` of the ground energy."""
    if rel_tol <= 0:
        raise ValidationError("rel_tol must be positive")
    e = es.energies
    tol = rel_tol * max(1.0, float(e[-1] - e[0]))
    return int(np.count_nonzero(e - e[0] <= tol))


def refine_min_gap(
    gap_fn: Callable[[float], float],
    bracket: tuple[float, float],
    tol: float = 1e-6,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Golden-section search for the minimum of ``gap_fn`` on ``bracket``.

    The bracket endpoints are evaluated too, so a minimum sitting on an
    edge of the interval is still returned.
    """
    lo, hi = map(float, bracket)
    if not (0.0 <= lo < hi <= 1.0):
        raise ValidationError(f"bad bracket {bracket}; need 0 <= lo < hi <= 1")
    if tol <= 0:
        raise ValidationError("tol must be positive")

    def f(x):
        y = float(gap_fn(x))
        if not math.isfinite(y):
            raise NumericalError(f"gap evaluated to {y} at lambda={x}")
        return y

    best = min(((f(lo), lo), (f(hi), hi)))
    a, b = lo, hi
    x1 = b - _INVPHI * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INVPHI * (b - a)
            f1 = f(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INVPHI * (b - a)
            f2 = f(x2)
    best = min(best, (f1, x1), (f2, x2))
    return best[1], best[0]
