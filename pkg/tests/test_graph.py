import json

import pytest

from spinanneal.errors import ConfigError, ValidationError
from spinanneal.graph import (
    COUPLING_PAIRS,
    PRESET_ORDER,
    SpinGraph,
    from_coupling_vector,
    preset_topology,
    project_coupling_vector,
)


def test_complete_preset_uniform():
    g = preset_topology("complete", -1, 1)
    assert len(g.edges) == 6
    assert all(J == -1 for _, _, J in g.edges)
    assert g.fields == (1.0,) * 4


def test_chain_preset_edges():
    g = preset_topology("chain", -1, 1)
    assert g.edge_pairs == ((0, 1), (1, 2), (2, 3))


def test_chain_loops_zero_weights():
    g = preset_topology("chain_loops", 0, 0)
    assert len(g.edges) == 5
    assert all(J == 0 for _, _, J in g.edges)
    assert g.fields == (0.0,) * 4
    assert (0, 3) not in g.edge_pairs


@pytest.mark.parametrize("name,count", [("chain", 3), ("square", 4), ("chain_loops", 5), ("complete", 6)])
def test_edge_counts(name, count):
    assert len(preset_topology(name, 1.0, 0.0).edges) == count


def test_presets_nest():
    chain, loops, full = (set(preset_topology(n, 1, 0).edge_pairs) for n in ("chain", "chain_loops", "complete"))
    assert chain < loops < full
    assert set(preset_topology("square", 1, 0).edge_pairs) == chain | {(0, 3)}


def test_unknown_preset_names_valid_ones():
    with pytest.raises(ConfigError) as exc:
        preset_topology("ring", -1, 1)
    for name in PRESET_ORDER:
        assert name in str(exc.value)


def test_coupling_vector_order():
    assert COUPLING_PAIRS == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


@pytest.mark.parametrize(
    "vec", [[-1, -0.5, -1, -1, -0.5, -1], [-0.5, -0.2, -0.5, -1, -0.5, -1]]
)
def test_inhomogeneous_vectors(vec):
    g = from_coupling_vector("complete", vec, [1, 1, 1, 1])
    assert len(g.edges) == 6
    assert [J for _, _, J in g.edges] == vec


def test_vector_projected_onto_chain():
    g = from_coupling_vector("chain", [-1, 0, 0, -1, 0, -1], [1, 1, 1, 1])
    assert g == preset_topology("chain", -1, 1)


def test_vector_nonzero_on_absent_edge():
    with pytest.raises(ValidationError, match="J14"):
        from_coupling_vector("chain", [-1, 0, -1, -1, 0, -1], [1, 1, 1, 1])


def test_vector_wrong_length():
    with pytest.raises(ValidationError):
        from_coupling_vector("complete", [-1] * 5, [1, 1, 1, 1])
    with pytest.raises(ValidationError):
        from_coupling_vector("complete", [-1] * 6, [1, 1, 1])


@pytest.mark.parametrize("name", PRESET_ORDER)
def test_uniform_vector_matches_preset(name):
    vec = project_coupling_vector(name, [-0.7] * 6)
    assert from_coupling_vector(name, vec, 0.3) == preset_topology(name, -0.7, 0.3)


def test_edges_canonicalized_and_sorted():
    g = SpinGraph(3, [(2, 1, 0.5), (0, 2, -1.0)], [0, 0, 0])
    assert g.edges == ((0, 2, -1.0), (1, 2, 0.5))


@pytest.mark.parametrize(
    "edges,fields",
    [
        ([(0, 0, 1.0)], [0, 0]),
        ([(0, 1, 1.0), (1, 0, 2.0)], [0, 0]),
        ([(0, 2, 1.0)], [0, 0]),
        ([(0, 1, 1.0)], [0]),
        ([(0, 1, float("nan"))], [0, 0]),
    ],
)
def test_invalid_graphs(edges, fields):
    with pytest.raises(ValidationError):
        SpinGraph(2, edges, fields)


def test_json_round_trip_byte_stable():
    g = from_coupling_vector("complete", [-1, -0.5, -1, -1, -0.5, -1], [1, 0.5, 1, 1])
    text = g.to_json()
    assert SpinGraph.from_json(text) == g
    assert SpinGraph.from_json(text).to_json() == text
    data = json.loads(text)
    assert data["edges"][0][:2] == [1, 2]


def test_json_is_one_based():
    g = SpinGraph.from_dict({"n_sites": 2, "edges": [[1, 2, -1]], "fields": [1, 1]})
    assert g.edges == ((0, 1, -1.0),)


def test_arbitrary_size_graph():
    g = SpinGraph(6, [(i, i + 1, 1.0) for i in range(5)], [0.0] * 6)
    assert g.n_sites == 6
