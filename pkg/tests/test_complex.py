import pytest

import oracles
from balgenus.complex import build_complex, degree, link, star, validate
from balgenus.constructors import connected_sum, octahedral_sphere
from balgenus.errors import (
    ColorOutOfRange,
    DanglingLabel,
    DuplicateFacet,
    FaceNotPresent,
    NonPure,
    RepeatedColorInFacet,
    RepeatedVertex,
)


def two_tetrahedra():
    """Two 3-simplices sharing the triangle abc."""
    return build_complex(
        [["a", "b", "c", "d"], ["a", "b", "c", "e"]],
        {"a": 0, "b": 1, "c": 2, "d": 3, "e": 3},
    )


def test_faces_match_vertex_subset_oracle(o3sum):
    for k in range(-1, 4):
        expected = 1 if k == -1 else oracles.faces_by_vertex_subsets(o3sum, k)
        assert o3sum.f_count(k) == expected


def test_octahedral_face_counts(o3, o4):
    assert [o3.f_count(k) for k in range(-1, 4)] == [1, 8, 24, 32, 16]
    assert [o4.f_count(k) for k in range(-1, 5)] == [1, 10, 40, 80, 80, 32]


def test_faces_out_of_range_are_empty(o3):
    assert o3.faces(7) == ()
    assert o3.faces(-1) == ((),)


def test_vertex_ids_follow_first_appearance():
    cx = build_complex([["z", "y"], ["y", "x"]], {"x": 0, "y": 1, "z": 0})
    assert cx.labels == ("z", "y", "x")


def test_extra_color_labels_ignored():
    cx = build_complex([["a", "b"]], {"a": 0, "b": 1, "unused": 0})
    assert cx.num_vertices == 2


@pytest.mark.parametrize(
    "facets, coloring, exc",
    [
        ([["a", "b"], ["a", "b", "c"]], {"a": 0, "b": 1, "c": 2}, NonPure),
        ([], {}, NonPure),
        ([["a", "b"]], {"a": 0, "b": 0}, RepeatedColorInFacet),
        ([["a", "a"]], {"a": 0}, RepeatedVertex),
        ([["a", "b"], ["b", "a"]], {"a": 0, "b": 1}, DuplicateFacet),
        ([["a", "b"]], {"a": 0}, DanglingLabel),
        ([["a", "b"]], {"a": 0, "b": 5}, ColorOutOfRange),
        ([["a", "b"]], {"a": 0, "b": "1"}, ColorOutOfRange),
    ],
)
def test_build_complex_rejects(facets, coloring, exc):
    with pytest.raises(exc):
        build_complex(facets, coloring)


def test_link_of_vertex_in_octahedral_is_octahedral(o3):
    lk = link(o3, o3.simplex(["a0"]))
    assert lk.dim == 2
    assert lk.palette == (1, 2, 3)
    assert oracles.color_isomorphic(
        lk, link(octahedral_sphere(3), octahedral_sphere(3).simplex(["b0"]))
    )
    assert len(lk.facets) == 8
    assert "a0" not in lk.labels and "b0" not in lk.labels


def test_link_of_facet_is_empty_complex(o3):
    lk = link(o3, o3.facets[0])
    assert lk.dim == -1
    assert lk.facets == ((),)


def test_link_of_link(o3sum):
    """lk(v, lk(u)) equals lk(uv) as labelled complexes."""
    for u, v in o3sum.edges()[:20]:
        inner = link(o3sum, (u,))
        via = link(inner, inner.simplex(o3sum.names((v,))))
        direct = link(o3sum, (u, v))
        assert via.same_as(direct)


def test_star_contains_sigma(o3):
    st = star(o3, o3.simplex(["a0", "b1"]))
    assert len(st.facets) == 4
    assert all({"a0", "b1"} <= set(st.names(f)) for f in st.facets)


def test_degree(o3, o3sum):
    assert degree(o3, o3.simplex(["a0"])) == 6
    assert degree(o3, o3.simplex(["a0", "a1"])) == 4
    assert degree(o3, o3.facets[0]) == 0
    # identified vertices gain the three other glued vertices of the far side
    assert max(degree(o3sum, (v,)) for v in range(o3sum.num_vertices)) == 9


def test_link_rejects_missing_face(o3):
    with pytest.raises(FaceNotPresent):
        link(o3, o3.simplex(["a0", "b0"]))
    with pytest.raises(FaceNotPresent):
        o3.simplex(["nope"])


def test_validate_octahedral(o3, o4, o3sum):
    for cx in (o3, o4, o3sum):
        rep = validate(cx)
        assert rep.normal_pseudomanifold
        assert rep.failures() == []


def test_validate_two_simplices_sharing_a_triangle():
    rep = validate(two_tetrahedra())
    assert not rep.ridge_condition
    assert not rep.normal_pseudomanifold
    assert "ridge_condition" in rep.failures()
    # the six boundary triangles other than abc lie in one facet each
    assert len(rep.witnesses["ridge_condition"]) == 6


def test_validate_two_spheres_at_a_vertex():
    """Two octahedral 3-spheres glued at one vertex: pinched, link disconnected."""
    o = octahedral_sphere(3)
    facets = [o.names(f) for f in o.facets]
    rename = {lab: (lab if lab == "a0" else lab + "'") for lab in o.labels}
    facets += [[rename[x] for x in o.names(f)] for f in o.facets]
    coloring = {}
    for lab, c in zip(o.labels, o.colors):
        coloring[lab] = c
        coloring[rename[lab]] = c
    rep = validate(build_complex(facets, coloring))
    assert rep.ridge_condition
    assert rep.connected
    assert not rep.links_connected
    assert rep.witnesses["links_connected"] == [["a0"]]
    assert not rep.facet_strongly_connected


def test_validate_disconnected():
    o = octahedral_sphere(3)
    facets = [o.names(f) for f in o.facets] + [[x + "'" for x in o.names(f)] for f in o.facets]
    coloring = {**dict(zip(o.labels, o.colors)), **{x + "'": c for x, c in zip(o.labels, o.colors)}}
    rep = validate(build_complex(facets, coloring))
    assert not rep.connected
    assert not rep.normal_pseudomanifold


def test_validation_report_dict(o3):
    d = validate(o3).as_dict()
    assert d["normal_pseudomanifold"] is True
    assert d["witnesses"] == {}


def test_validate_is_cached(o3):
    assert validate(o3) is validate(o3)


def test_connected_sum_keeps_first_labels(o3):
    out = connected_sum(o3, 0, octahedral_sphere(3), 0)
    assert set(o3.labels) <= set(out.labels)
