"""Rank-selected subcomplexes Delta_S and structural checks on them.

For a two-color set S the subcomplex Delta_S is a graph; most checks here
look at that graph: its degree sequence, cycles with a single branch vertex,
and the join decomposition that exists when the graph is a single cycle.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from ._unionfind import UnionFind
from .complex import ColoredComplex, link
from .errors import BadArity, PreconditionFailed
from .flags import color_mask, gamma


@dataclass(frozen=True)
class RankSelected:
    parent: ColoredComplex
    colors: tuple[int, ...]
    complex: ColoredComplex
    parent_ids: tuple[int, ...]  # parent vertex id for each vertex of ``complex``

    def graph(self) -> dict[int, set[int]]:
        """Adjacency of the 1-skeleton, keyed by parent vertex ids."""
        adj: dict[int, set[int]] = {v: set() for v in self.parent_ids}
        for u, v in self.complex.faces(1):
            a, b = self.parent_ids[u], self.parent_ids[v]
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(n) for n in self.graph().values()), reverse=True))


def restrict(cx: ColoredComplex, colors: Iterable[int]) -> RankSelected:
    """Delta_S: every face whose colors lie in S.

    Facets of a balanced pure complex are rainbow, so Delta_S is generated by
    the restrictions of the facets to S and is pure of dimension |S| - 1.
    """
    colors = tuple(sorted(set(colors)))
    mask = color_mask(cx, colors)
    if not colors:
        raise BadArity("need at least one color")
    tops = sorted({tuple(v for v in f if mask >> cx.colors[v] & 1) for f in cx.facets})
    used = sorted({v for f in tops for v in f})
    remap = {v: i for i, v in enumerate(used)}
    sub = ColoredComplex(
        [cx.labels[v] for v in used],
        [cx.colors[v] for v in used],
        [tuple(remap[v] for v in f) for f in tops],
        palette=colors,
    )
    return RankSelected(cx, colors, sub, tuple(used))


def _pair(colors) -> tuple[int, int]:
    colors = tuple(sorted(set(colors)))
    if len(colors) != 2:
        raise BadArity(f"need exactly two colors, got {colors}")
    return colors


def strongly_connected(cx: ColoredComplex, colors: Iterable[int]) -> bool:
    """Whether any two top faces of Delta_S are joined by a chain of top faces
    with consecutive members meeting in a codimension-1 face."""
    colors = tuple(sorted(set(colors)))
    if len(colors) < 2:
        raise BadArity("need at least two colors")
    tops = restrict(cx, colors).complex.facets
    uf = UnionFind(len(tops))
    first_owner: dict[tuple, int] = {}
    for i, f in enumerate(tops):
        for j in range(len(f)):
            key = f[:j] + f[j + 1 :]
            if key in first_owner:
                uf.union(first_owner[key], i)
            else:
                first_owner[key] = i
    return uf.components == 1


def almost_induced_cycles(adj: Mapping[Hashable, Iterable[Hashable]]) -> list[tuple]:
    """Cycles with exactly one vertex of degree > 2, all others of degree 2.

    Every other vertex on such a cycle has both neighbours on the cycle, so
    the cycle minus its branch vertex is a whole component of the subgraph
    induced on degree-2 vertices. Scanning those components is exact and
    linear; no cycle enumeration is needed. Each witness starts at its branch
    vertex.
    """
    adj = {v: set(n) for v, n in adj.items()}
    deg = {v: len(n) for v, n in adj.items()}
    seen = set()
    found = []
    for start in sorted(adj, key=repr):
        if deg[start] != 2 or start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in adj[v]:
                if deg[w] == 2 and w not in seen:
                    seen.add(w)
                    queue.append(w)
        comp_set = set(comp)
        outside = [(v, w) for v in comp for w in adj[v] if w not in comp_set]
        if len(outside) != 2:
            continue  # a closed cycle of degree-2 vertices, or not a path
        (v1, c1), (v2, c2) = outside
        if c1 != c2 or deg[c1] <= 2:
            continue
        path = [v1]
        prev = None
        while path[-1] != v2:
            nxt = next(w for w in adj[path[-1]] if w in comp_set and w != prev)
            prev = path[-1]
            path.append(nxt)
        found.append((c1, *path))
    return found


def almost_induced_scan(cx: ColoredComplex, colors: Iterable[int]) -> list[list[str]]:
    """Almost-induced cycles of the graph Delta_S, as label lists.

    Expected to be empty for every balanced normal pseudomanifold.
    """
    rs = restrict(cx, _pair(colors))
    return [cx.names(c) for c in almost_induced_cycles(rs.graph())]


def is_theta_shape(cx: ColoredComplex, colors: Iterable[int]) -> bool:
    """Connected, exactly two vertices of degree 3 and all others of degree 2.

    This is the shape of Delta_S (a cycle with one extra path between two of
    its vertices) whenever Gamma_S = 1 on a balanced normal pseudomanifold.
    """
    rs = restrict(cx, _pair(colors))
    counts = Counter(rs.degree_sequence())
    if counts[3] != 2 or counts[2] + 2 != len(rs.parent_ids):
        return False
    return strongly_connected(cx, rs.colors)


@dataclass(frozen=True)
class JoinCertificate:
    """Delta equals ``base`` joined with the cycle ``cycle`` (= Delta_S)."""

    colors: tuple[int, int]
    base: ColoredComplex
    cycle: ColoredComplex


def join_decomposition(cx: ColoredComplex, colors: Iterable[int]) -> JoinCertificate | None:
    """Certify Delta = Delta_{[d]-S} * Delta_S when Gamma_S = 0.

    Returns None if any of the three checks fails: Delta_S a single cycle,
    every codimension-2 face colored [d]-S has link Delta_S, and the facets
    of Delta are exactly the joins of those faces with the edges of Delta_S.

    Raises:
        PreconditionFailed: Gamma_S is not zero.
    """
    pair = _pair(colors)
    g = gamma(cx, pair)
    if g != 0:
        raise PreconditionFailed(f"join decomposition needs Gamma_S = 0, got {g}")
    rs = restrict(cx, pair)
    adj = rs.graph()
    if any(len(n) != 2 for n in adj.values()) or not strongly_connected(cx, pair):
        return None
    cycle_edges = {frozenset(e) for e in (tuple(rs.parent_ids[v] for v in f) for f in rs.complex.facets)}

    rest = tuple(c for c in cx.palette if c not in pair)
    base = restrict(cx, rest)
    base_faces = [tuple(base.parent_ids[v] for v in f) for f in base.complex.facets]
    for sigma in base_faces:
        lk = link(cx, sigma)
        lk_edges = {frozenset(lk.names(f)) for f in lk.facets}
        if lk_edges != {frozenset(cx.names(e)) for e in cycle_edges}:
            return None

    expected = {frozenset(sigma) | e for sigma in base_faces for e in cycle_edges}
    if expected != {frozenset(f) for f in cx.facets}:
        return None
    return JoinCertificate(colors=pair, base=base.complex, cycle=rs.complex)
