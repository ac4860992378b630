"""Property tests for the invariants that hold on every balanced sphere we can build."""

import random
from itertools import combinations

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

import oracles
from balgenus.complex import ColoredComplex, link, validate
from balgenus.constructors import connected_sum, random_connected_sum
from balgenus.dual import bicolored_cycle_count, dual_graph, is_bipartite
from balgenus.edgepath import rank_bounds
from balgenus.flags import (
    codim2_count,
    dehn_sommerville_check,
    euler,
    gamma,
    h_pair_symmetry_check,
    swartz_check,
)
from balgenus.genus import Necklace, balanced_genus, necklaces, rho, verify_bounds
from balgenus.io import digest, dumps, loads
from balgenus.rank_selected import almost_induced_cycles, almost_induced_scan, is_theta_shape, join_decomposition

SETTINGS = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def spheres(draw, dims=(3, 4), max_summands=3):
    d = draw(st.sampled_from(dims))
    k = draw(st.integers(1, max_summands))
    seed = draw(st.integers(0, 2**16))
    return random_connected_sum(d, k, random.Random(seed))


@st.composite
def graphs(draw):
    n = draw(st.integers(3, 9))
    edges = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=14))
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def relabel(cx, rng):
    """Same complex with shuffled vertex order and fresh labels."""
    order = list(range(cx.num_vertices))
    rng.shuffle(order)
    pos = {v: k for k, v in enumerate(order)}
    labels = [f"x{cx.labels[v]}" for v in order]
    colors = [cx.colors[v] for v in order]
    return ColoredComplex(labels, colors, [tuple(pos[v] for v in f) for f in cx.facets])


def recolor(cx, perm):
    return ColoredComplex(cx.labels, [perm[c] for c in cx.colors], cx.facets)


@SETTINGS
@given(spheres())
def test_spheres_are_normal_and_satisfy_identities(cx):
    assert validate(cx).normal_pseudomanifold
    assert euler(cx) == 1 + (-1) ** cx.dim
    assert dehn_sommerville_check(cx)
    for k in range(cx.dim + 2):
        for S in combinations(cx.palette, k):
            assert swartz_check(cx, S)
    if cx.dim == 3:
        assert h_pair_symmetry_check(cx)


@SETTINGS
@given(spheres())
def test_bicolored_cycles_are_codim2_faces(cx):
    graph = dual_graph(cx)
    assert graph.is_regular()
    assert is_bipartite(graph)
    for i, j in combinations(cx.palette, 2):
        assert bicolored_cycle_count(graph, i, j) == codim2_count(cx, i, j)


@SETTINGS
@given(spheres())
def test_three_evaluations_agree_and_are_integral(cx):
    rec = balanced_genus(cx)
    assert rec.closed_form_used
    for row in rec.rows:
        assert row.rho_euler == row.rho_flag == row.rho_closed
        assert row.rho_flag.denominator == 1
    rep = verify_bounds(cx, asserted_m=0)
    assert rep.ok


@SETTINGS
@given(spheres(), spheres(), st.data())
def test_rho_additive(a, b, data):
    assume(a.dim == b.dim)
    i = data.draw(st.integers(0, len(a.facets) - 1))
    j = data.draw(st.integers(0, len(b.facets) - 1))
    s = connected_sum(a, i, b, j)
    ra, rb, rs = balanced_genus(a).rho_map(), balanced_genus(b).rho_map(), balanced_genus(s).rho_map()
    for eps in necklaces(a.dim):
        assert rs[eps] == ra[eps] + rb[eps]


@SETTINGS
@given(spheres())
def test_rank_selected_structure(cx):
    for S in combinations(cx.palette, 2):
        assert almost_induced_scan(cx, S) == []
        g = gamma(cx, S)
        assert g >= 0
        if g == 0:
            assert join_decomposition(cx, S) is not None
        if g == 1:
            assert is_theta_shape(cx, S)


@SETTINGS
@given(spheres(max_summands=2), st.integers(0, 2**16))
def test_relabel_invariance(cx, seed):
    other = relabel(cx, random.Random(seed))
    assert balanced_genus(other).genus == balanced_genus(cx).genus
    assert digest(loads(dumps(cx))) == digest(cx)


@SETTINGS
@given(spheres(max_summands=2), st.permutations(range(4)))
def test_color_permutation_permutes_rho(cx, perm):
    assume(cx.dim == 3)
    moved = recolor(cx, perm)
    for eps in necklaces(3):
        image = Necklace.canonical(perm[c] for c in eps.order)
        assert rho(moved, image) == rho(cx, eps)


@SETTINGS
@given(spheres(dims=(3,), max_summands=2))
def test_vertex_links_are_spheres(cx):
    for v in range(0, cx.num_vertices, 3):
        lk = link(cx, (v,))
        assert lk.dim == 2
        assert validate(lk).normal_pseudomanifold
        assert euler(lk) == 2


@SETTINGS
@given(spheres(max_summands=2), st.integers(0, 100))
def test_spheres_simply_connected_bounds(cx, seed):
    rb = rank_bounds(cx, seed=seed)
    assert rb.lower == 0
    assert rb.lower <= rb.upper


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_almost_induced_matches_enumeration(adj):
    ours = {frozenset(c) for c in almost_induced_cycles(adj)}
    assert ours == oracles.almost_induced_by_enumeration(adj)


@settings(max_examples=100)
@given(st.permutations(range(6)), st.integers(0, 5), st.booleans())
def test_necklace_canonical_is_class_invariant(perm, shift, flip):
    seq = list(perm[shift:]) + list(perm[:shift])
    if flip:
        seq.reverse()
    assert Necklace.canonical(seq) == Necklace.canonical(perm)
    canon = Necklace.canonical(perm)
    assert Necklace.canonical(canon.order) == canon
    assert canon in set(necklaces(5))
