"""Colored simplicial complexes: storage, face index, links, stars, validation.

Vertices carry string labels externally and dense integer ids internally.
A simplex is a strictly increasing tuple of vertex ids. Complexes are
immutable once built; the per-dimension face index is computed on first use.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from ._unionfind import UnionFind
from .errors import (
    ColorOutOfRange,
    DanglingLabel,
    DuplicateFacet,
    FaceNotPresent,
    NonPure,
    RepeatedColorInFacet,
    RepeatedVertex,
)

Simplex = tuple[int, ...]

MAX_COLORS = 31


class ColoredComplex:
    """A pure simplicial complex with a proper vertex coloring.

    ``palette`` is the set of colors a facet must use exactly once each. For
    complexes read from disk it is ``0..d``; links and rank-selected
    subcomplexes inherit a subset of their parent's colors.
    """

    def __init__(
        self,
        labels: Sequence[str],
        colors: Sequence[int],
        facets: Iterable[Sequence[int]],
        palette: Sequence[int] | None = None,
    ):
        self.labels = tuple(labels)
        self.colors = tuple(colors)
        facets = [tuple(sorted(f)) for f in facets]
        if not facets:
            raise NonPure("complex has no facets")
        sizes = {len(f) for f in facets}
        if len(sizes) != 1:
            raise NonPure(f"facets of differing sizes {sorted(sizes)}")
        self.dim = sizes.pop() - 1
        if palette is None:
            palette = range(self.dim + 1)
        self.palette = tuple(sorted(palette))
        if len(self.palette) != self.dim + 1:
            raise ColorOutOfRange(
                f"palette {self.palette} does not match dimension {self.dim}"
            )
        if len(self.palette) > MAX_COLORS:
            raise ColorOutOfRange(f"at most {MAX_COLORS} colors supported")
        allowed = set(self.palette)
        for v, c in enumerate(self.colors):
            if c not in allowed:
                raise ColorOutOfRange(
                    f"vertex {self.labels[v]!r} has color {c} outside {self.palette}"
                )
        seen = set()
        for f in facets:
            if len(set(f)) != len(f):
                raise RepeatedVertex(f"facet {self._names(f)} repeats a vertex")
            if len({self.colors[v] for v in f}) != len(f):
                raise RepeatedColorInFacet(
                    f"facet {self._names(f)} repeats a color"
                )
            if f in seen:
                raise DuplicateFacet(f"facet {self._names(f)} listed twice")
            seen.add(f)
        self.facets: tuple[Simplex, ...] = tuple(sorted(facets))
        self._faces: dict[int, tuple[Simplex, ...]] = {}
        self._lock = threading.Lock()
        self._report = None
        self._vertex_facets = None
        self._flag_f_cache = None
        self._dual_cache = None

    # -- basic accessors -------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    def _names(self, simplex):
        return [self.labels[v] for v in simplex]

    def names(self, simplex: Iterable[int]) -> list[str]:
        """Labels of the vertices of ``simplex``."""
        return self._names(simplex)

    def simplex(self, labels: Iterable[str]) -> Simplex:
        """Vertex-id simplex for a list of labels."""
        index = self.label_index
        try:
            return tuple(sorted(index[lab] for lab in labels))
        except KeyError as exc:
            raise FaceNotPresent(f"unknown vertex label {exc.args[0]!r}") from None

    @property
    def label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def color_mask(self, simplex: Iterable[int]) -> int:
        mask = 0
        for v in simplex:
            mask |= 1 << self.colors[v]
        return mask

    def facet_label_sets(self) -> frozenset[frozenset[str]]:
        """Facets as label sets; equality of these is equality of complexes."""
        return frozenset(frozenset(self._names(f)) for f in self.facets)

    def same_as(self, other: ColoredComplex) -> bool:
        """Equal as labelled, colored complexes."""
        if self.facet_label_sets() != other.facet_label_sets():
            return False
        mine = dict(zip(self.labels, self.colors))
        theirs = dict(zip(other.labels, other.colors))
        return mine == theirs

    # -- face index ------------------------------------------------------

    def faces(self, k: int) -> tuple[Simplex, ...]:
        """All ``k``-dimensional faces in sorted order (cached, compute-once)."""
        cached = self._faces.get(k)
        if cached is not None:
            return cached
        with self._lock:
            if k not in self._faces:
                if k < -1 or k > self.dim:
                    found = ()
                elif k == -1:
                    found = ((),)
                else:
                    acc = set()
                    for f in self.facets:
                        acc.update(combinations(f, k + 1))
                    found = tuple(sorted(acc))
                self._faces[k] = found
        return self._faces[k]

    def all_faces(self) -> list[Simplex]:
        out = []
        for k in range(-1, self.dim + 1):
            out.extend(self.faces(k))
        return out

    def f_count(self, k: int) -> int:
        return len(self.faces(k))

    def vertex_facets(self) -> list[list[int]]:
        """For each vertex, the indices of facets containing it."""
        if self._vertex_facets is None:
            table = [[] for _ in range(self.num_vertices)]
            for i, f in enumerate(self.facets):
                for v in f:
                    table[v].append(i)
            self._vertex_facets = table
        return self._vertex_facets

    def facets_containing(self, simplex: Sequence[int]) -> list[int]:
        if not simplex:
            return list(range(len(self.facets)))
        table = self.vertex_facets()
        best = min(simplex, key=lambda v: len(table[v]))
        need = set(simplex)
        return [i for i in table[best] if need.issubset(self.facets[i])]

    def contains(self, simplex: Sequence[int]) -> bool:
        return bool(self.facets_containing(tuple(simplex))) or not simplex

    def edges(self) -> tuple[Simplex, ...]:
        return self.faces(1)

    def neighbors(self) -> list[set[int]]:
        """Adjacency sets of the graph G(Delta)."""
        adj = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges():
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def subcomplex(self, facets: Iterable[Sequence[int]], palette=None) -> ColoredComplex:
        """Complex generated by ``facets`` (ids of this complex), re-indexed."""
        facets = [tuple(f) for f in facets]
        used = sorted({v for f in facets for v in f})
        remap = {v: i for i, v in enumerate(used)}
        return ColoredComplex(
            [self.labels[v] for v in used],
            [self.colors[v] for v in used],
            [tuple(remap[v] for v in f) for f in facets],
            palette=self.palette if palette is None else palette,
        )

    def __repr__(self):
        return (
            f"ColoredComplex(dim={self.dim}, vertices={self.num_vertices}, "
            f"facets={len(self.facets)})"
        )


def build_complex(
    facet_list: Sequence[Sequence[str]], coloring: Mapping[str, int]
) -> ColoredComplex:
    """Index a labelled facet list into a :class:`ColoredComplex`.

    Vertex ids follow first appearance in ``facet_list``. Labels present in
    ``coloring`` but absent from every facet are ignored.

    Raises:
        NonPure: empty input or facets of differing sizes.
        DanglingLabel: a facet label has no color.
        RepeatedColorInFacet: a facet uses some color twice.
        DuplicateFacet: the same vertex set appears twice.
        ColorOutOfRange: a color outside ``0..d``.
    """
    if not facet_list:
        raise NonPure("complex has no facets")
    labels: list[str] = []
    index: dict[str, int] = {}
    facets = []
    for facet in facet_list:
        ids = []
        for lab in facet:
            lab = str(lab)
            if lab not in coloring:
                raise DanglingLabel(f"vertex {lab!r} has no color")
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
            ids.append(index[lab])
        facets.append(ids)
    colors = []
    for lab in labels:
        c = coloring[lab]
        if isinstance(c, bool) or not isinstance(c, int):
            raise ColorOutOfRange(f"color of {lab!r} is not an integer: {c!r}")
        colors.append(c)
    return ColoredComplex(labels, colors, facets)


# -- links and stars -----------------------------------------------------


def _check_face(cx: ColoredComplex, sigma: Sequence[int]) -> tuple[Simplex, list[int]]:
    sigma = tuple(sorted(sigma))
    if any(v < 0 or v >= cx.num_vertices for v in sigma):
        raise FaceNotPresent(f"vertex id out of range in {sigma}")
    containing = cx.facets_containing(sigma)
    if not containing:
        raise FaceNotPresent(f"{cx.names(sigma)} is not a face")
    return sigma, containing


def link(cx: ColoredComplex, sigma: Sequence[int]) -> ColoredComplex:
    """lk(sigma) = faces disjoint from sigma whose join with sigma is a face.

    The link of a facet is the complex ``{()}`` of dimension -1.
    """
    sigma, containing = _check_face(cx, sigma)
    drop = set(sigma)
    facets = [tuple(v for v in cx.facets[i] if v not in drop) for i in containing]
    sigma_colors = {cx.colors[v] for v in sigma}
    palette = [c for c in cx.palette if c not in sigma_colors]
    return cx.subcomplex(facets, palette=palette)


def star(cx: ColoredComplex, sigma: Sequence[int]) -> ColoredComplex:
    """Subcomplex generated by the facets containing ``sigma``."""
    _, containing = _check_face(cx, sigma)
    return cx.subcomplex([cx.facets[i] for i in containing])


def degree(cx: ColoredComplex, sigma: Sequence[int]) -> int:
    """Number of vertices in the link of ``sigma``."""
    sigma, containing = _check_face(cx, sigma)
    verts = set()
    for i in containing:
        verts.update(cx.facets[i])
    return len(verts) - len(sigma)


def _connected_facets(facets: Sequence[Sequence[int]]) -> bool:
    """Whether the complex generated by ``facets`` is connected."""
    verts = sorted({v for f in facets for v in f})
    if len(verts) <= 1:
        return True
    pos = {v: i for i, v in enumerate(verts)}
    uf = UnionFind(len(verts))
    for f in facets:
        for v in f[1:]:
            uf.union(pos[f[0]], pos[v])
    return uf.components == 1


# -- validation ----------------------------------------------------------


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`; failures carry witness faces (as labels)."""

    pure: bool
    balanced: bool
    ridge_condition: bool
    links_connected: bool
    connected: bool
    facet_strongly_connected: bool
    witnesses: dict[str, list[list[str]]] = field(default_factory=dict)

    @property
    def normal_pseudomanifold(self) -> bool:
        return self.pure and self.ridge_condition and self.links_connected and self.connected

    def failures(self) -> list[str]:
        names = (
            "pure",
            "balanced",
            "ridge_condition",
            "links_connected",
            "connected",
            "facet_strongly_connected",
        )
        return [n for n in names if not getattr(self, n)]

    def as_dict(self) -> dict:
        return {
            "pure": self.pure,
            "balanced": self.balanced,
            "ridge_condition": self.ridge_condition,
            "links_connected": self.links_connected,
            "connected": self.connected,
            "facet_strongly_connected": self.facet_strongly_connected,
            "normal_pseudomanifold": self.normal_pseudomanifold,
            "witnesses": {k: v for k, v in sorted(self.witnesses.items())},
        }


def ridge_map(cx: ColoredComplex) -> dict[Simplex, list[int]]:
    """Each (d-1)-face mapped to the indices of the facets containing it."""
    table: dict[Simplex, list[int]] = defaultdict(list)
    for i, f in enumerate(cx.facets):
        for j in range(len(f)):
            table[f[:j] + f[j + 1 :]].append(i)
    return table


def validate(cx: ColoredComplex) -> ValidationReport:
    """Check the normal pseudomanifold conditions. Never raises; cached."""
    if cx._report is not None:
        return cx._report
    witnesses: dict[str, list[list[str]]] = {}

    pure = len({len(f) for f in cx.facets}) == 1
    bad_colors = [f for f in cx.facets if len({cx.colors[v] for v in f}) != len(f)]
    if bad_colors:
        witnesses["balanced"] = [cx.names(f) for f in bad_colors]

    ridges = ridge_map(cx)
    bad_ridges = sorted(r for r, fs in ridges.items() if len(fs) != 2)
    if bad_ridges:
        witnesses["ridge_condition"] = [cx.names(r) for r in bad_ridges]

    bad_links = []
    for k in range(0, cx.dim - 1):
        for sigma in cx.faces(k):
            drop = set(sigma)
            lk = [
                [v for v in cx.facets[i] if v not in drop]
                for i in cx.facets_containing(sigma)
            ]
            if not _connected_facets(lk):
                bad_links.append(sigma)
    if bad_links:
        witnesses["links_connected"] = [cx.names(s) for s in bad_links]

    connected = _connected_facets(cx.facets)

    uf = UnionFind(len(cx.facets))
    for fs in ridges.values():
        for other in fs[1:]:
            uf.union(fs[0], other)
    strongly = uf.components == 1

    report = ValidationReport(
        pure=pure,
        balanced=not bad_colors,
        ridge_condition=not bad_ridges,
        links_connected=not bad_links,
        connected=connected,
        facet_strongly_connected=strongly,
        witnesses=witnesses,
    )
    cx._report = report
    return report


def require_normal(cx: ColoredComplex, what: str = "operation") -> None:
    from .errors import PreconditionFailed

    report = validate(cx)
    if not report.normal_pseudomanifold:
        raise PreconditionFailed(
            f"{what} needs a balanced normal pseudomanifold; failing checks: "
            + ", ".join(report.failures())
        )
