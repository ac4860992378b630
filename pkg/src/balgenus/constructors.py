"""Octahedral spheres, joins and balanced connected sums."""

from __future__ import annotations

import random
from collections import deque
from itertools import product

from .complex import ColoredComplex, require_normal
from .errors import DimensionMismatch, DimensionTooLow, InvalidHandle


def octahedral_sphere(d: int) -> ColoredComplex:
    """The join of d+1 zero-spheres {a_i, b_i}, both colored i.

    Vertex ids are ``2*i`` for ``a_i`` and ``2*i + 1`` for ``b_i``.
    """
    if d < 0:
        raise DimensionTooLow(f"dimension must be non-negative, got {d}")
    labels, colors = [], []
    for i in range(d + 1):
        labels += [f"a{i}", f"b{i}"]
        colors += [i, i]
    facets = [
        tuple(2 * i + bit for i, bit in enumerate(bits))
        for bits in product((0, 1), repeat=d + 1)
    ]
    return ColoredComplex(labels, colors, facets)


def _fresh(label: str, taken: set[str]) -> str:
    while label in taken:
        label += "'"
    return label


def join(cx1: ColoredComplex, cx2: ColoredComplex) -> ColoredComplex:
    """Join of two complexes on disjoint vertex sets.

    Colors of ``cx2`` are shifted past those of ``cx1``; colliding labels from
    ``cx2`` get primes appended.
    """
    shift = max(cx1.palette) + 1 if cx1.palette else 0
    taken = set(cx1.labels)
    labels = list(cx1.labels)
    for lab in cx2.labels:
        lab = _fresh(lab, taken)
        taken.add(lab)
        labels.append(lab)
    colors = list(cx1.colors) + [c + shift for c in cx2.colors]
    palette = list(cx1.palette) + [c + shift for c in cx2.palette]
    n1 = cx1.num_vertices
    facets = [f1 + tuple(v + n1 for v in f2) for f1 in cx1.facets for f2 in cx2.facets]
    return ColoredComplex(labels, colors, facets, palette=palette)


def connected_sum(
    cx1: ColoredComplex, facet1: int, cx2: ColoredComplex, facet2: int
) -> ColoredComplex:
    """Balanced connected sum along facet ``facet1`` of cx1 and ``facet2`` of cx2.

    Rainbow facets admit exactly one color-preserving bijection, so the
    gluing map is determined by the facet pair. The glued vertices keep the
    labels from ``cx1``; other labels of ``cx2`` are primed on collision.
    """
    if cx1.dim != cx2.dim or cx1.palette != cx2.palette:
        raise DimensionMismatch(
            f"cannot glue dimension {cx1.dim} to dimension {cx2.dim}"
        )
    for cx, h in ((cx1, facet1), (cx2, facet2)):
        if not 0 <= h < len(cx.facets):
            raise InvalidHandle(f"facet index {h} out of range 0..{len(cx.facets) - 1}")
    require_normal(cx1, "connected sum")
    require_normal(cx2, "connected sum")

    sigma1, sigma2 = cx1.facets[facet1], cx2.facets[facet2]
    by_color = {cx1.colors[v]: v for v in sigma1}
    psi = {w: by_color[cx2.colors[w]] for w in sigma2}

    labels = list(cx1.labels)
    colors = list(cx1.colors)
    taken = set(labels)
    remap = {}
    for w, lab in enumerate(cx2.labels):
        if w in psi:
            remap[w] = psi[w]
            continue
        lab = _fresh(lab, taken)
        taken.add(lab)
        remap[w] = len(labels)
        labels.append(lab)
        colors.append(cx2.colors[w])

    facets = [f for i, f in enumerate(cx1.facets) if i != facet1]
    facets += [
        tuple(remap[w] for w in f) for i, f in enumerate(cx2.facets) if i != facet2
    ]
    out = ColoredComplex(labels, colors, facets, palette=cx1.palette)
    require_normal(out, "connected sum result")
    return out


def _graph_distance(cx: ColoredComplex, sources, targets) -> int | None:
    nbrs = cx.neighbors()
    dist = {v: 0 for v in sources}
    queue = deque(sources)
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    found = [dist[t] for t in targets if t in dist]
    return min(found) if found else None


def handle_addition(cx: ColoredComplex, facet1: int, facet2: int) -> ColoredComplex:
    """Remove two facets and identify their boundaries color by color.

    Applied to a sphere this gives a sphere bundle over the circle: the
    product if the facets lie on opposite sides of the (bipartite) dual
    graph, the twisted bundle otherwise. The vertices of ``facet2`` are
    merged into those of ``facet1``.

    Raises:
        InvalidHandle: bad index, or the facets are closer than distance 3
            in the graph of the complex (the quotient would not be simplicial).
    """
    for h in (facet1, facet2):
        if not 0 <= h < len(cx.facets):
            raise InvalidHandle(f"facet index {h} out of range 0..{len(cx.facets) - 1}")
    require_normal(cx, "handle addition")
    sigma1, sigma2 = cx.facets[facet1], cx.facets[facet2]
    dist = _graph_distance(cx, sigma1, sigma2)
    if dist is None or dist < 3:
        raise InvalidHandle(f"facets {facet1} and {facet2} are at distance {dist}; need >= 3")
    by_color = {cx.colors[v]: v for v in sigma1}
    merge = {w: by_color[cx.colors[w]] for w in sigma2}
    keep = [v for v in range(cx.num_vertices) if v not in merge]
    index = {v: k for k, v in enumerate(keep)}
    facets = [
        tuple(index[merge.get(v, v)] for v in f)
        for i, f in enumerate(cx.facets)
        if i not in (facet1, facet2)
    ]
    out = ColoredComplex(
        [cx.labels[v] for v in keep], [cx.colors[v] for v in keep], facets, palette=cx.palette
    )
    require_normal(out, "handle addition result")
    return out


def find_handle(cx: ColoredComplex, same_side: bool) -> tuple[int, int] | None:
    """First facet pair valid for :func:`handle_addition`.

    ``same_side`` asks for two facets in the same class of the dual graph's
    bipartition (a twisted handle on an orientable input).
    """
    from .dual import dual_graph

    graph = dual_graph(cx)
    side = [-1] * graph.num_nodes
    side[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in graph.adj[u].values():
            if side[w] < 0:
                side[w] = 1 - side[u]
                queue.append(w)
    for i in range(len(cx.facets)):
        for j in range(i + 1, len(cx.facets)):
            if (side[i] == side[j]) != same_side:
                continue
            dist = _graph_distance(cx, cx.facets[i], cx.facets[j])
            if dist is not None and dist >= 3:
                return i, j
    return None


def random_connected_sum(d: int, summands: int, rng: random.Random) -> ColoredComplex:
    """Iterated connected sum of ``summands`` octahedral d-spheres at random facets."""
    out = octahedral_sphere(d)
    for _ in range(summands - 1):
        piece = octahedral_sphere(d)
        out = connected_sum(
            out, rng.randrange(len(out.facets)), piece, rng.randrange(len(piece.facets))
        )
    return out
