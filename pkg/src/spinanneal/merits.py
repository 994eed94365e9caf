"""Figures of merit evaluated on pure states in the computational basis."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ValidationError

SINGULAR_CUTOFF = 1e-14
ORTHONORMAL_ATOL = 1e-10


def _n_sites(state: np.ndarray) -> int:
    dim = len(state)
    n = dim.bit_length() - 1
    if dim < 1 or 2**n != dim:
        raise ValidationError(f"state length {dim} is not a power of two")
    return n


@dataclass(frozen=True)
class Bipartition:
    """Split of the sites into two non-empty blocks (0-based site indices)."""

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        left, right = tuple(self.left), tuple(self.right)
        if not left or not right:
            raise ValidationError("both sides of a bipartition must be non-empty")
        if set(left) & set(right) or len(set(left)) != len(left) or len(set(right)) != len(right):
            raise ValidationError("bipartition blocks must be disjoint without repeats")
        if min(left + right) < 0:
            raise ValidationError("site indices must be non-negative")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @property
    def n_sites(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def label(self) -> str:
        k, n = len(self.left), self.n_sites
        if self.left == tuple(range(k)) and self.right == tuple(range(k, n)):
            return f"{k}|{n - k}"
        return ",".join(str(i + 1) for i in self.left) + "|" + ",".join(str(i + 1) for i in self.right)

    @classmethod
    def from_label(cls, label: str) -> "Bipartition":
        """Parse ``"k|m"`` (first ``k`` sites against the next ``m``) or an
        explicit 1-based split such as ``"1,3|2,4"``."""
        try:
            left, right = label.split("|")
            if "," not in label:
                k, m = int(left), int(right)
                return cls(tuple(range(k)), tuple(range(k, k + m)))
            return cls(
                tuple(int(s) - 1 for s in left.split(",")),
                tuple(int(s) - 1 for s in right.split(",")),
            )
        except (ValueError, AttributeError):
            raise ValidationError(f"bad partition label {label!r}; expected e.g. '2|2'") from None

    def reversed(self) -> "Bipartition":
        return Bipartition(self.right, self.left)


DEFAULT_PARTITIONS = tuple(Bipartition.from_label(s) for s in ("2|2", "1|3", "3|1"))


def entanglement_entropy(state: np.ndarray, part: Bipartition, base: float = math.e) -> float:
    """Von Neumann entropy of the reduced state across ``part``.

    The amplitude tensor is regrouped into a matrix with rows indexed by the
    left sites and columns by the right sites, site order preserved.
    """
    state = np.asarray(state, dtype=complex)
    n = _n_sites(state)
    if part.n_sites != n or set(part.left + part.right) != set(range(n)):
        raise ValidationError(f"partition {part} does not cover the {n} sites of the state")
    tensor = state.reshape((2,) * n).transpose(part.left + part.right)
    mat = tensor.reshape(2 ** len(part.left), 2 ** len(part.right))
    p = np.linalg.svd(mat, compute_uv=False) ** 2
    p = p[p >= SINGULAR_CUTOFF]
    s = float(-np.sum(p * np.log(p)))
    if base != math.e:
        s /= math.log(base)
    return s if s > 0.0 else 0.0


def mean_magnetization(state: np.ndarray) -> float:
    """Average of <Z_i> over sites; Z is diagonal so only |a|^2 enters."""
    state = np.asarray(state)
    n = _n_sites(state)
    probs = np.abs(state) ** 2
    idx = np.arange(len(state))
    # bit of site i is bit (n-1-i) of the index; 0 -> +1, 1 -> -1
    z = sum(1 - 2 * ((idx >> (n - 1 - i)) & 1) for i in range(n))
    return float(np.dot(probs, z) / n)


def coherence_l1(state: np.ndarray) -> float:
    """l1-norm coherence of ``|psi><psi|``: (sum |a|)^2 - sum |a|^2."""
    mags = np.abs(np.asarray(state))
    c = float(mags.sum() ** 2 - np.dot(mags, mags))
    return c if c > 0.0 else 0.0


def fidelity(state: np.ndarray, target: np.ndarray) -> float:
    """``tr(nu rho)`` for pure states, i.e. ``|<target|state>|^2``."""
    state, target = np.asarray(state), np.asarray(target)
    if state.shape != target.shape:
        raise ValidationError(f"dimension mismatch {state.shape} vs {target.shape}")
    return min(1.0, float(abs(np.vdot(target, state)) ** 2))


def fidelity_to_subspace(state: np.ndarray, targets: Sequence[np.ndarray]) -> float:
    """Weight of ``state`` in the span of orthonormal ``targets``."""
    basis = np.atleast_2d(np.asarray(targets, dtype=complex))
    state = np.asarray(state)
    if basis.shape[1] != state.shape[0]:
        raise ValidationError(f"dimension mismatch {basis.shape[1]} vs {state.shape[0]}")
    gram = basis.conj() @ basis.T
    if np.max(np.abs(gram - np.eye(len(basis)))) > ORTHONORMAL_ATOL:
        raise ValidationError("target states are not orthonormal")
    return min(1.0, float(np.sum(np.abs(basis.conj() @ state) ** 2)))
