"""Edge-path group presentations and bounds on the rank of the fundamental group.

Given a spanning tree T of the 1-skeleton, the group G_T has one generator per
edge, tree edges are trivial, and every 2-face {a<b<c} gives (a,b)(b,c) = (a,c).
The lower bound on the rank is the minimal generator count of the
abelianization; the upper bound is the number of generators not yet shown
trivial by vertex-link containment and triangle propagation.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .complex import ColoredComplex, validate
from .errors import Disconnected
from .flags import gamma
from .normal_form import abelian_invariants
from .rank_selected import restrict

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SpanningTree:
    root: int
    parent: tuple[int, ...]  # parent[root] == -1
    depth: tuple[int, ...]
    edges: frozenset[Edge]
    colors: tuple[int, ...] | None = None  # set when T extends a tree of Delta_S

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while self.parent[out[-1]] != -1:
            out.append(self.parent[out[-1]])
        return out

    def fundamental_cycle(self, u: int, v: int) -> list[int]:
        """Vertices of the unique cycle in T + {uv}, in cyclic order from u."""
        pu, pv = [u], [v]
        a, b = u, v
        while self.depth[a] > self.depth[b]:
            a = self.parent[a]
            pu.append(a)
        while self.depth[b] > self.depth[a]:
            b = self.parent[b]
            pv.append(b)
        while a != b:
            a, b = self.parent[a], self.parent[b]
            pu.append(a)
            pv.append(b)
        return pu + pv[-2::-1]


def spanning_tree(
    cx: ColoredComplex, colors: Iterable[int] | None = None, seed: int | None = None
) -> SpanningTree:
    """BFS spanning tree of G(Delta).

    With ``colors`` = S, a BFS tree of the graph Delta_S is grown first and
    then extended to all of G(Delta). ``seed`` randomizes the root and the
    neighbour order; without it the tree is deterministic.

    Raises:
        Disconnected: G(Delta) is not connected.
    """
    n = cx.num_vertices
    adj = [sorted(a) for a in cx.neighbors()]
    rng = random.Random(seed) if seed is not None else None
    if rng is not None:
        for a in adj:
            rng.shuffle(a)

    parent = [-1] * n
    depth = [0] * n
    seen = [False] * n
    order: list[int] = []
    tree: set[Edge] = set()

    def grow(starts, allowed):
        queue = deque(starts)
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w] and (allowed is None or w in allowed):
                    seen[w] = True
                    parent[w], depth[w] = u, depth[u] + 1
                    tree.add(_edge(u, w))
                    order.append(w)
                    queue.append(w)

    chosen = None
    if colors is not None:
        # Delta_S is connected on normal pseudomanifolds; if not, only the
        # component of the root is grown inside Delta_S.
        chosen = tuple(sorted(set(colors)))
        s_verts = set(restrict(cx, chosen).parent_ids)
        root = min(s_verts) if rng is None else rng.choice(sorted(s_verts))
        seen[root] = True
        order.append(root)
        grow([root], s_verts)
    else:
        root = rng.randrange(n) if rng is not None else 0
        seen[root] = True
        order.append(root)
    grow(list(order), None)
    if len(order) != n:
        raise Disconnected(f"graph of the complex has {n - len(order)} unreachable vertices")
    return SpanningTree(root, tuple(parent), tuple(depth), frozenset(tree), chosen)


@dataclass(frozen=True)
class Presentation:
    """G_T: generators are the non-tree edges; relations are tree edges and 2-faces."""

    tree: SpanningTree
    generators: tuple[Edge, ...]
    triangles: tuple[tuple[int, int, int], ...]
    trivial: frozenset[Edge] = frozenset()
    link_trivial: frozenset[Edge] = frozenset()

    @property
    def num_relations(self) -> int:
        return len(self.triangles) + len(self.tree.edges)

    @property
    def surviving(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.generators if e not in self.trivial)

    def relation_matrix(self) -> list[list[int]]:
        """Abelianized triangle relations over the generators (tree edges set to 0)."""
        col = {e: k for k, e in enumerate(self.generators)}
        rows = []
        for a, b, c in self.triangles:
            row = [0] * len(self.generators)
            for e, s in (((a, b), 1), ((b, c), 1), ((a, c), -1)):
                k = col.get(e)
                if k is not None:
                    row[k] += s
            if any(row):
                rows.append(row)
        return rows


def presentation(cx: ColoredComplex, tree: SpanningTree) -> Presentation:
    gens = tuple(e for e in cx.faces(1) if e not in tree.edges)
    return Presentation(tree=tree, generators=gens, triangles=tuple(cx.faces(2)))


def link_trivialize(
    cx: ColoredComplex, tree: SpanningTree, pres: Presentation
) -> Presentation:
    """Mark generators whose fundamental cycle lies in the link of some vertex.

    Such a cycle can be coned off through that vertex, so its class, which
    equals the class of the generator, is trivial.
    """
    nbrs = cx.neighbors()
    tri = set(cx.faces(2))
    found = set()
    for e in pres.generators:
        cyc = tree.fundamental_cycle(*e)
        on_cycle = set(cyc)
        cands = set.intersection(*(nbrs[v] for v in cyc)) - on_cycle
        cyc_edges = [_edge(cyc[k], cyc[(k + 1) % len(cyc)]) for k in range(len(cyc))]
        for w in sorted(cands):
            if all(tuple(sorted((w, x, y))) in tri for x, y in cyc_edges):
                found.add(e)
                break
    return replace(
        pres,
        trivial=pres.trivial | found,
        link_trivial=pres.link_trivial | found,
    )


def propagate_trivial(pres: Presentation, max_passes: int = 10) -> tuple[Presentation, int]:
    """Repeatedly kill a generator whose triangle has both other edges trivial.

    Returns the reduced presentation and the number of passes made.
    """
    known = set(pres.tree.edges) | set(pres.trivial)
    gens = set(pres.generators)
    passes = 0
    for passes in range(1, max_passes + 1):
        changed = False
        for a, b, c in pres.triangles:
            sides = ((a, b), (b, c), (a, c))
            unknown = [e for e in sides if e not in known]
            if len(unknown) == 1 and unknown[0] in gens:
                known.add(unknown[0])
                changed = True
        if not changed:
            break
    return replace(pres, trivial=frozenset(known & gens)), passes


@dataclass(frozen=True)
class RankBounds:
    """Bounds on the rank m of the fundamental group.

    ``lower`` is the minimal generator count of H_1 (free rank plus number of
    torsion factors); ``upper`` is a generator count of a presentation.
    """

    lower: int
    upper: int
    betti: int
    torsion: list[int]
    generators: int
    relations: int
    triangles: int
    link_trivialized: int
    surviving: int
    passes: int
    colors: tuple[int, ...] | None = None
    s_generators: int | None = None
    simply_connected_witness: str | None = None
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "betti": self.betti,
            "torsion": list(self.torsion),
            "generators": self.generators,
            "relations": self.relations,
            "triangles": self.triangles,
            "link_trivialized": self.link_trivialized,
            "surviving": self.surviving,
            "passes": self.passes,
            "colors": None if self.colors is None else list(self.colors),
            "s_generators": self.s_generators,
            "simply_connected_witness": self.simply_connected_witness,
            "notes": list(self.notes),
        }


def link_containing(cx: ColoredComplex, colors: Sequence[int]) -> int | None:
    """A vertex u with Delta_S contained in lk(u), if one exists."""
    rs = restrict(cx, colors)
    s_edges = [tuple(rs.parent_ids[v] for v in f) for f in rs.complex.facets]
    verts = set(rs.parent_ids)
    nbrs = cx.neighbors()
    cands = set.intersection(*(nbrs[v] for v in verts)) - verts
    tri = set(cx.faces(2))
    for u in sorted(cands):
        if all(tuple(sorted((u, *e))) in tri for e in s_edges):
            return u
    return None


def rank_bounds(
    cx: ColoredComplex,
    colors: Iterable[int] | None = None,
    tree: SpanningTree | None = None,
    max_passes: int = 10,
    seed: int | None = None,
) -> RankBounds:
    """Lower and upper bounds on the rank of pi_1(|Delta|).

    With ``colors`` = S on a balanced normal pseudomanifold, the tree extends
    a spanning tree of Delta_S. Since G_T is then generated by the edges of
    Delta_S, the non-tree edges of Delta_S that are not yet trivial also
    bound the rank (``s_generators``); at most Gamma_S + 1 of them exist.
    """
    colors = None if colors is None else tuple(sorted(set(colors)))
    if tree is None:
        tree = spanning_tree(cx, colors, seed=seed)
    pres = presentation(cx, tree)
    pres = link_trivialize(cx, tree, pres)
    n_link = len(pres.link_trivial)
    pres, passes = propagate_trivial(pres, max_passes=max_passes)

    betti, torsion = abelian_invariants(pres.relation_matrix(), len(pres.generators))
    lower = betti + len(torsion)
    upper = len(pres.surviving)
    notes = []
    s_generators = None
    witness = None
    normal = validate(cx).normal_pseudomanifold
    if colors is not None and len(colors) == 2 and normal:
        if tree.colors == colors:
            rs = restrict(cx, colors)
            s_edges = {
                tuple(sorted(rs.parent_ids[v] for v in f)) for f in rs.complex.facets
            }
            s_generators = sum(1 for e in pres.surviving if e in s_edges)
            if s_generators < upper:
                notes.append(f"upper bound from Delta_S generators (Gamma_S = {gamma(cx, colors)})")
            upper = min(upper, s_generators)
        u = link_containing(cx, colors)
        if u is not None:
            witness = cx.labels[u]
            notes.append(f"Delta_S lies in the link of {witness}: simply connected")
            upper = 0
    return RankBounds(
        lower=lower,
        upper=upper,
        betti=betti,
        torsion=torsion,
        generators=len(pres.generators),
        relations=pres.num_relations,
        triangles=len(pres.triangles),
        link_trivialized=n_link,
        surviving=len(pres.surviving),
        passes=passes,
        colors=colors,
        s_generators=s_generators,
        simply_connected_witness=witness,
        notes=notes,
    )
