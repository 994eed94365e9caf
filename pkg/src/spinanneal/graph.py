"""Four-node spin-network topologies and their coupling/field assignments.

Sites are 0-based inside the library. The JSON form (``to_dict`` /
``from_dict``) uses 1-based indices.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ConfigError, ValidationError

# Edge sets for the four 4-site presets, 0-based and canonically ordered.
PRESETS: dict[str, tuple[tuple[int, int], ...]] = {
    "chain": ((0, 1), (1, 2), (2, 3)),
    "square": ((0, 1), (0, 3), (1, 2), (2, 3)),
    # complete graph minus the endpoint edge (1,4)
    "chain_loops": ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)),
    "complete": ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)),
}
PRESET_ORDER = ("chain", "square", "chain_loops", "complete")

PRESET_SITES = 4
# Index order of a coupling vector: [J12, J13, J14, J23, J24, J34].
COUPLING_PAIRS: tuple[tuple[int, int], ...] = tuple(itertools.combinations(range(PRESET_SITES), 2))


@dataclass(frozen=True)
class SpinGraph:
    """Undirected weighted graph of ``n_sites`` spins with per-site fields.

    ``edges`` holds ``(i, j, J)`` with ``i < j`` sorted by ``(i, j)``. Edges
    given as ``(j, i)`` are flipped into canonical orientation on
    construction; self-loops and duplicates are rejected.
    """

    n_sites: int
    edges: tuple[tuple[int, int, float], ...]
    fields: tuple[float, ...]

    def __init__(self, n_sites: int, edges: Iterable[Sequence], fields: Iterable[float]):
        if isinstance(n_sites, bool) or int(n_sites) != n_sites or n_sites < 1:
            raise ValidationError(f"n_sites must be a positive integer, got {n_sites!r}")
        n_sites = int(n_sites)
        canon = {}
        for edge in edges:
            if len(edge) != 3:
                raise ValidationError(f"edge must be (i, j, J), got {edge!r}")
            i, j, coupling = int(edge[0]), int(edge[1]), float(edge[2])
            if i == j:
                raise ValidationError(f"self-loop on site {i} is not allowed")
            if not (0 <= i < n_sites and 0 <= j < n_sites):
                raise ValidationError(f"edge ({i}, {j}) out of range for {n_sites} sites")
            if not math.isfinite(coupling):
                raise ValidationError(f"coupling on edge ({i}, {j}) is not finite")
            key = (min(i, j), max(i, j))
            if key in canon:
                raise ValidationError(f"duplicate edge {key}")
            canon[key] = coupling
        fields = tuple(float(h) for h in fields)
        if len(fields) != n_sites:
            raise ValidationError(f"expected {n_sites} fields, got {len(fields)}")
        if not all(math.isfinite(h) for h in fields):
            raise ValidationError("fields must be finite")
        object.__setattr__(self, "n_sites", n_sites)
        object.__setattr__(self, "edges", tuple((i, j, canon[i, j]) for i, j in sorted(canon)))
        object.__setattr__(self, "fields", fields)

    @property
    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, j) for i, j, _ in self.edges)

    def to_dict(self) -> dict:
        return {
            "n_sites": self.n_sites,
            "edges": [[i + 1, j + 1, J] for i, j, J in self.edges],
            "fields": list(self.fields),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SpinGraph":
        missing = {"n_sites", "edges", "fields"} - set(data)
        if missing:
            raise ValidationError(f"graph is missing keys: {sorted(missing)}")
        extra = set(data) - {"n_sites", "edges", "fields"}
        if extra:
            raise ValidationError(f"unknown graph keys: {sorted(extra)}")
        edges = []
        for edge in data["edges"]:
            if len(edge) != 3:
                raise ValidationError(f"edge must be [i, j, J], got {edge!r}")
            edges.append((int(edge[0]) - 1, int(edge[1]) - 1, edge[2]))
        return cls(data["n_sites"], edges, data["fields"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "SpinGraph":
        return cls.from_dict(json.loads(text))


def _check_preset(name: str) -> tuple[tuple[int, int], ...]:
    try:
        return PRESETS[name]
    except (KeyError, TypeError):
        raise ConfigError(
            f"unknown preset {name!r}; valid presets: {', '.join(PRESET_ORDER)}"
        ) from None


def _broadcast_fields(h, n_sites: int) -> list[float]:
    if isinstance(h, (int, float)) and not isinstance(h, bool):
        return [float(h)] * n_sites
    h = [float(x) for x in h]
    if len(h) != n_sites:
        raise ValidationError(f"expected {n_sites} field values, got {len(h)}")
    return h


def preset_topology(name: str, J: float, h: float) -> SpinGraph:
    """Uniform coupling ``J`` on the preset's edges and uniform field ``h``."""
    pairs = _check_preset(name)
    if not (math.isfinite(J) and math.isfinite(h)):
        raise ValidationError("J and h must be finite")
    return SpinGraph(PRESET_SITES, [(i, j, J) for i, j in pairs], [h] * PRESET_SITES)


def from_coupling_vector(topology: str, J: Sequence[float], h) -> SpinGraph:
    """Build a preset topology from a 6-entry coupling vector.

    Entries belonging to pairs that are not edges of ``topology`` must be
    zero. ``h`` is either one value per site or a scalar.
    """
    pairs = set(_check_preset(topology))
    values = [float(x) for x in J]
    if len(values) != len(COUPLING_PAIRS):
        raise ValidationError(
            f"coupling vector must have {len(COUPLING_PAIRS)} entries, got {len(values)}"
        )
    edges = []
    for (i, j), coupling in zip(COUPLING_PAIRS, values):
        if (i, j) in pairs:
            edges.append((i, j, coupling))
        elif coupling != 0.0:
            raise ValidationError(
                f"coupling J{i + 1}{j + 1}={coupling} is nonzero but ({i + 1},{j + 1}) "
                f"is not an edge of {topology!r}"
            )
    return SpinGraph(PRESET_SITES, edges, _broadcast_fields(h, PRESET_SITES))


def project_coupling_vector(topology: str, J: Sequence[float]) -> list[float]:
    """Zero the entries of ``J`` whose pair is absent from ``topology``."""
    pairs = set(_check_preset(topology))
    if len(J) != len(COUPLING_PAIRS):
        raise ValidationError(
            f"coupling vector must have {len(COUPLING_PAIRS)} entries, got {len(J)}"
        )
    return [float(c) if p in pairs else 0.0 for p, c in zip(COUPLING_PAIRS, J)]


def format_edges(name: str) -> str:
    return " ".join(f"({i + 1},{j + 1})" for i, j in _edge_display_order(name))


def _edge_display_order(name):
    # chain-like walk first, then the remaining edges, for readability
    pairs = _check_preset(name)
    walk = [p for p in ((0, 1), (1, 2), (2, 3)) if p in pairs]
    return walk + [p for p in pairs if p not in walk]
