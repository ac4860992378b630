"""Edge-colored dual graphs and the Euler characteristic of regular embeddings.

The dual graph has one node per facet and one edge per ridge, colored by the
color missing from that ridge. For a cyclic color order ``eps`` the regular
embedding's faces are the bicolored cycles on consecutive colors of ``eps``,
so its Euler characteristic only needs cycle counts, never a rotation system.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from ._unionfind import UnionFind
from .complex import ColoredComplex, ridge_map
from .errors import BadColors, CrossCheckError, DimensionTooLow, PreconditionFailed
from .flags import codim2_count

if TYPE_CHECKING:
    from .genus import Necklace

PALETTE = (
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "magenta",
    "cyan",
    "gold",
    "gray",
)


@dataclass
class DualGraph:
    """A properly edge-colored graph.

    ``adj[u][c]`` is the neighbour of node ``u`` along color ``c``.
    Built from a complex it is (d+1)-regular; small hand-made graphs used in
    tests need not be.
    """

    num_nodes: int
    colors: tuple[int, ...]
    edges: list[tuple[int, int, int]]  # (u, v, color), u < v
    node_labels: list[str] = field(default_factory=list)
    adj: list[dict[int, int]] = field(init=False)

    def __post_init__(self):
        self.adj = [dict() for _ in range(self.num_nodes)]
        for u, v, c in self.edges:
            if c in self.adj[u] or c in self.adj[v]:
                raise BadColors(f"color {c} used twice at node {u} or {v}")
            self.adj[u][c] = v
            self.adj[v][c] = u
        if not self.node_labels:
            self.node_labels = [str(i) for i in range(self.num_nodes)]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def is_regular(self) -> bool:
        k = len(self.colors)
        return all(len(a) == k for a in self.adj)


def dual_graph(cx: ColoredComplex) -> DualGraph:
    """Dual graph of a balanced normal pseudomanifold; node i is facet i.

    Raises:
        PreconditionFailed: some ridge does not lie in exactly two facets.
    """
    cached = getattr(cx, "_dual_cache", None)
    if cached is not None:
        return cached
    edges = []
    for ridge, owners in sorted(ridge_map(cx).items()):
        if len(owners) != 2:
            raise PreconditionFailed(
                f"ridge {cx.names(ridge)} lies in {len(owners)} facets, need 2"
            )
        u, v = sorted(owners)
        (missing,) = set(cx.palette) - {cx.colors[w] for w in ridge}
        edges.append((u, v, missing))
    edges.sort()
    graph = DualGraph(
        num_nodes=len(cx.facets),
        colors=cx.palette,
        edges=edges,
        node_labels=[" ".join(cx.names(f)) for f in cx.facets],
    )
    cx._dual_cache = graph
    return graph


def is_bipartite(graph: DualGraph) -> bool:
    """Two-coloring test by BFS; for a dual graph this is orientability."""
    side = [-1] * graph.num_nodes
    for root in range(graph.num_nodes):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in graph.adj[u].values():
                if side[v] == -1:
                    side[v] = side[u] ^ 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return False
    return True


def bicolored_components(graph: DualGraph, i: int, j: int) -> list[list[int]]:
    """Connected components of the subgraph on colors i and j (nodes sorted)."""
    if i == j or i not in graph.colors or j not in graph.colors:
        raise BadColors(f"need two distinct colors from {graph.colors}, got {i}, {j}")
    uf = UnionFind(graph.num_nodes)
    touched = set()
    for u, v, c in graph.edges:
        if c == i or c == j:
            uf.union(u, v)
            touched.update((u, v))
    groups: dict[int, list[int]] = {}
    for u in sorted(touched):
        groups.setdefault(uf.find(u), []).append(u)
    return sorted(groups.values())


def bicolored_cycle_count(graph: DualGraph, i: int, j: int) -> int:
    """Number of {i, j}-colored cycles (components of the two-color subgraph)."""
    return len(bicolored_components(graph, i, j))


def pair_cycle_counts(graph: DualGraph) -> dict[frozenset, int]:
    cols = graph.colors
    return {
        frozenset((a, b)): bicolored_cycle_count(graph, a, b)
        for x, a in enumerate(cols)
        for b in cols[x + 1 :]
    }


@dataclass(frozen=True)
class EmbeddingSummary:
    necklace: tuple[int, ...]
    cycle_counts: tuple[int, ...]  # C for each consecutive pair of the necklace
    vertices: int
    edges: int
    faces: int
    euler_char: int
    orientable: bool

    @property
    def rho(self) -> Fraction:
        """1 - chi/2: the genus if orientable, half the genus otherwise."""
        return 1 - Fraction(self.euler_char, 2)

    @property
    def surface_genus(self) -> int:
        """Genus of the embedding surface (non-orientable genus if not orientable)."""
        return int(self.rho) if self.orientable else int(2 * self.rho)


def embedding_summary(
    cx: ColoredComplex,
    necklace: "Necklace | Sequence[int]",
    graph: DualGraph | None = None,
    counts: dict[frozenset, int] | None = None,
) -> EmbeddingSummary:
    """Count V, E, F of the regular embedding for ``necklace``.

    The Euler characteristic is computed from counted bicolored cycles and
    cross-checked against the codimension-2 flag numbers.

    Raises:
        DimensionTooLow: d < 3.
        CrossCheckError: the two evaluations disagree.
    """
    if cx.dim < 3:
        raise DimensionTooLow(f"regular embeddings are defined here for d >= 3, got {cx.dim}")
    order = tuple(getattr(necklace, "order", necklace))
    if sorted(order) != list(cx.palette):
        raise BadColors(f"{order} is not a cyclic order of {cx.palette}")
    graph = dual_graph(cx) if graph is None else graph
    pairs = [(order[k], order[(k + 1) % len(order)]) for k in range(len(order))]
    if counts is None:
        cyc = tuple(bicolored_cycle_count(graph, a, b) for a, b in pairs)
    else:
        cyc = tuple(counts[frozenset(p)] for p in pairs)
    v = graph.num_nodes
    e = graph.num_edges
    f = sum(cyc)
    chi = v - e + f

    d = cx.dim
    flag_sum = sum(codim2_count(cx, a, b) for a, b in pairs)
    twice_flag_chi = 2 * flag_sum + (1 - d) * len(cx.facets)
    if 2 * chi != twice_flag_chi:
        raise CrossCheckError(
            f"Euler characteristic mismatch for {order}: V-E+F={chi}, "
            f"flag formula={Fraction(twice_flag_chi, 2)}"
        )
    return EmbeddingSummary(
        necklace=order,
        cycle_counts=cyc,
        vertices=v,
        edges=e,
        faces=f,
        euler_char=chi,
        orientable=is_bipartite(graph),
    )


def export_dot(
    graph: DualGraph, pair: tuple[int, int] | None = None, name: str = "dual"
) -> str:
    """Graphviz text for the dual graph, or for its {i, j}-subgraph.

    Node order and edge order are fixed, so the same graph always gives
    byte-identical output.
    """
    if pair is not None:
        comps = bicolored_components(graph, *pair)
        keep = set(pair)
        nodes = sorted(u for comp in comps for u in comp)
        edges = [e for e in graph.edges if e[2] in keep]
    else:
        comps = None
        nodes = list(range(graph.num_nodes))
        edges = graph.edges
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    if comps is not None:
        lines.append(f"  // {len(comps)} bicolored cycles on colors {pair[0]},{pair[1]}")
    for u in nodes:
        lines.append(f'  n{u} [label="{graph.node_labels[u]}"];')
    for u, v, c in edges:
        color = PALETTE[c % len(PALETTE)]
        lines.append(f'  n{u} -- n{v} [color="{color}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

