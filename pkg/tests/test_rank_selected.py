from itertools import combinations

import pytest

import oracles
from conftest import iterated_sum
from balgenus.complex import build_complex
from balgenus.constructors import octahedral_sphere
from balgenus.errors import BadArity, PreconditionFailed
from balgenus.flags import gamma
from balgenus.rank_selected import (
    almost_induced_cycles,
    almost_induced_scan,
    is_theta_shape,
    join_decomposition,
    restrict,
    strongly_connected,
)


def bowtie():
    """Two triangles sharing only the color-2 vertex c."""
    return build_complex(
        [["a", "b", "c"], ["d", "e", "c"]],
        {"a": 0, "b": 1, "c": 2, "d": 0, "e": 1},
    )


def test_restrict_octahedral_pair_is_square(o3):
    rs = restrict(o3, (0, 1))
    assert rs.complex.dim == 1
    assert len(rs.complex.facets) == 4
    assert rs.degree_sequence() == (2, 2, 2, 2)
    assert sorted(o3.labels[v] for v in rs.parent_ids) == ["a0", "a1", "b0", "b1"]


def test_restrict_graph_keys_are_parent_ids(o3sum):
    rs = restrict(o3sum, (2, 3))
    adj = rs.graph()
    assert set(adj) == set(rs.parent_ids)
    for u, ns in adj.items():
        for w in ns:
            assert o3sum.contains((min(u, w), max(u, w)))


def test_restrict_rejects_empty(o3):
    with pytest.raises(BadArity):
        restrict(o3, ())


def test_strongly_connected_bowtie():
    cx = bowtie()
    assert not strongly_connected(cx, (0, 1, 2))
    assert not strongly_connected(cx, (0, 1))
    assert strongly_connected(cx, (0, 2))
    with pytest.raises(BadArity):
        strongly_connected(cx, (0,))


def test_strongly_connected_corpus(o3sum):
    for S in combinations(range(4), 2):
        assert strongly_connected(o3sum, S)
    assert strongly_connected(o3sum, (0, 1, 3))


def test_almost_induced_cycle_with_pendant_path():
    """A 5-cycle with a 2-edge path hanging off vertex 0."""
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6)]
    adj = {v: set() for v in range(7)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    found = almost_induced_cycles(adj)
    assert len(found) == 1
    assert found[0][0] == 0
    assert set(found[0]) == {0, 1, 2, 3, 4}
    assert {frozenset(c) for c in found} == oracles.almost_induced_by_enumeration(adj)


def test_almost_induced_figure_eight_and_theta():
    eight = {0: {1, 2, 3, 4}, 1: {0, 2}, 2: {0, 1}, 3: {0, 4}, 4: {0, 3}}
    assert len(almost_induced_cycles(eight)) == 2
    theta = {0: {1, 2, 3}, 5: {1, 2, 3}, 1: {0, 5}, 2: {0, 5}, 3: {0, 5}}
    assert almost_induced_cycles(theta) == []
    assert oracles.almost_induced_by_enumeration(theta) == set()


def test_scan_empty_on_spheres(o3, o3sum):
    for cx in (o3, o3sum, iterated_sum(4, 3)):
        for S in combinations(cx.palette, 2):
            assert almost_induced_scan(cx, S) == []


def test_theta_shape(o3, o3sum):
    for S in combinations(range(4), 2):
        assert is_theta_shape(o3sum, S)
        assert not is_theta_shape(o3, S)


def test_join_decomposition_octahedral(o3, o4):
    for cx in (o3, o4):
        for S in combinations(cx.palette, 2):
            cert = join_decomposition(cx, S)
            assert cert is not None
            assert cert.colors == S
            assert len(cert.cycle.facets) == 4
            assert len(cert.base.facets) * 4 == len(cx.facets)


def test_join_decomposition_needs_gamma_zero(o3sum):
    with pytest.raises(PreconditionFailed):
        join_decomposition(o3sum, (0, 1))


def test_join_decomposition_refuted():
    """Delta_S is a 4-cycle but the two apexes each cone only half of it."""
    cx = build_complex(
        [["a", "b", "x"], ["b", "c", "x"], ["c", "d", "y"], ["d", "a", "y"]],
        {"a": 0, "b": 1, "c": 0, "d": 1, "x": 2, "y": 2},
    )
    assert gamma(cx, (0, 1)) == 0
    assert join_decomposition(cx, (0, 1)) is None


def test_join_decomposition_high_dim():
    cx = octahedral_sphere(5)
    cert = join_decomposition(cx, (1, 4))
    assert cert is not None
    assert cert.base.palette == (0, 2, 3, 5)
