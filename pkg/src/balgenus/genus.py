"""Necklaces, the balanced epsilon-genus rho, and the balanced genus.

rho is evaluated three ways and the results must agree exactly:

* ``euler``: 1 - (V - E + F)/2 from counted bicolored cycles of the dual graph;
* ``flag``: 1 - (1-d)/4 f_d - 1/2 sum of f^{ij}_{d-2} over consecutive pairs;
* ``closed``: the manifold-only closed forms in dimensions 3 and 4.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .complex import ColoredComplex, require_normal
from .dual import dual_graph, embedding_summary, is_bipartite, pair_cycle_counts
from .errors import (
    BadColors,
    CrossCheckError,
    DehnSommervilleViolated,
    DimensionTooLow,
    UnsupportedDimension,
)
from .flags import (
    codim2_count,
    dehn_sommerville_check,
    euler,
    flag_f,
    gamma,
    h_pair_symmetry_check,
    swartz_check,
)


@dataclass(frozen=True, order=True)
class Necklace:
    """A cyclic order of the colors, up to rotation and reflection.

    Stored rotated so the smallest color comes first, in whichever direction
    makes the second entry smaller than the last.
    """

    order: tuple[int, ...]

    @classmethod
    def canonical(cls, seq: Iterable[int]) -> Necklace:
        seq = tuple(seq)
        if len(set(seq)) != len(seq):
            raise BadColors(f"{seq} repeats a color")
        k = seq.index(min(seq))
        rot = seq[k:] + seq[:k]
        rev = (rot[0],) + tuple(reversed(rot[1:]))
        return cls(min(rot, rev))

    def pairs(self) -> list[tuple[int, int]]:
        o = self.order
        return [(o[k], o[(k + 1) % len(o)]) for k in range(len(o))]

    def __str__(self):
        return "(" + ",".join(map(str, self.order)) + ")"


def necklaces(d: int, palette: Sequence[int] | None = None) -> list[Necklace]:
    """All d!/2 rotation-and-reflection classes of cyclic orders of 0..d.

    Reflection does not change rho, which depends only on the set of
    consecutive color pairs.
    """
    if d < 3:
        raise DimensionTooLow(f"necklaces are enumerated for d >= 3, got {d}")
    colors = tuple(range(d + 1)) if palette is None else tuple(sorted(palette))
    first, rest = colors[0], colors[1:]
    return [
        Necklace((first, *p)) for p in permutations(rest) if p[0] < p[-1]
    ]


def _as_necklace(eps) -> Necklace:
    return eps if isinstance(eps, Necklace) else Necklace.canonical(eps)


def rho_flag(cx: ColoredComplex, eps) -> Fraction:
    """rho from f_d and the codimension-2 flag numbers."""
    eps = _as_necklace(eps)
    d = cx.dim
    total = sum(codim2_count(cx, a, b) for a, b in eps.pairs())
    return 1 - Fraction(1 - d, 4) * len(cx.facets) - Fraction(total, 2)


def rho(cx: ColoredComplex, eps) -> Fraction:
    """Balanced epsilon-genus; the cycle-count and flag evaluations must agree.

    Raises:
        DimensionTooLow: d < 3.
        CrossCheckError: the two evaluations differ.
    """
    if cx.dim < 3:
        raise DimensionTooLow(f"rho is defined for d >= 3, got {cx.dim}")
    require_normal(cx, "rho")
    eps = _as_necklace(eps)
    by_cycles = embedding_summary(cx, eps).rho
    by_flags = rho_flag(cx, eps)
    if by_cycles != by_flags:
        raise CrossCheckError(f"rho mismatch for {eps}: {by_cycles} vs {by_flags}")
    return by_flags


def rho_closed_form(cx: ColoredComplex, eps) -> Fraction:
    """Manifold closed forms.

    d = 3: 1 + f_{e0 e2} - f_{e0} - f_{e2}, i.e. 1 + Gamma_{e0 e2}.
    d = 4: 1 + 2 chi + f_1 - sum_i f_{e_i e_{i+1}} - 2 f_0.

    Raises:
        UnsupportedDimension: d not in {3, 4}.
        DehnSommervilleViolated: face numbers rule out a manifold.
    """
    eps = _as_necklace(eps)
    if cx.dim not in (3, 4):
        raise UnsupportedDimension(f"closed forms exist for d=3,4, not {cx.dim}")
    if not dehn_sommerville_check(cx):
        raise DehnSommervilleViolated("Dehn-Sommerville relation fails; not a manifold")
    o = eps.order
    if cx.dim == 3:
        return Fraction(1 + gamma(cx, (o[0], o[2])))
    f0, f1 = cx.f_count(0), cx.f_count(1)
    consecutive = sum(flag_f(cx, p) for p in eps.pairs())
    return Fraction(1 + 2 * euler(cx) + f1 - consecutive - 2 * f0)


def closed_form_applies(cx: ColoredComplex) -> bool:
    """Dimension 3 or 4 and the face numbers satisfy the manifold identities."""
    if cx.dim not in (3, 4) or not dehn_sommerville_check(cx):
        return False
    if cx.dim == 3:
        return h_pair_symmetry_check(cx)
    return all(
        swartz_check(cx, (a, b))
        for a in cx.palette
        for b in cx.palette
        if a < b
    )


@dataclass(frozen=True)
class NecklaceRow:
    necklace: Necklace
    euler_char: int
    rho_euler: Fraction
    rho_flag: Fraction
    rho_closed: Fraction | None

    @property
    def rho(self) -> Fraction:
        return self.rho_flag


@dataclass(frozen=True)
class GenusRecord:
    dim: int
    orientable: bool
    rows: list[NecklaceRow]
    genus: Fraction
    argmin: list[Necklace]
    closed_form_used: bool
    notes: list[str] = field(default_factory=list)

    def rho_map(self) -> dict[Necklace, Fraction]:
        return {r.necklace: r.rho for r in self.rows}


def balanced_genus(cx: ColoredComplex) -> GenusRecord:
    """Minimum of rho over all necklaces, with every evaluation cross-checked.

    The result is the balanced genus of this triangulation; for the
    underlying space it is only an upper bound.

    Raises:
        DimensionTooLow: d < 3.
        PreconditionFailed: not a balanced normal pseudomanifold.
        CrossCheckError: two evaluations of some rho disagree, or a manifold
            input produced a non-integral rho.
    """
    if cx.dim < 3:
        raise DimensionTooLow(f"balanced genus is defined for d >= 3, got {cx.dim}")
    require_normal(cx, "balanced genus")
    graph = dual_graph(cx)
    counts = pair_cycle_counts(graph)
    use_closed = closed_form_applies(cx)
    notes = []
    if cx.dim in (3, 4) and not use_closed:
        notes.append("closed form skipped: face numbers violate the manifold identities")

    rows = []
    for eps in necklaces(cx.dim, cx.palette):
        summary = embedding_summary(cx, eps, graph=graph, counts=counts)
        r_flag = rho_flag(cx, eps)
        if summary.rho != r_flag:
            raise CrossCheckError(f"rho mismatch for {eps}: {summary.rho} vs {r_flag}")
        r_closed = None
        if use_closed:
            r_closed = rho_closed_form(cx, eps)
            if r_closed != r_flag:
                raise CrossCheckError(
                    f"closed form {r_closed} disagrees with rho {r_flag} for {eps}"
                )
            if r_flag.denominator != 1:
                raise CrossCheckError(f"non-integral rho {r_flag} on a manifold input")
        rows.append(NecklaceRow(eps, summary.euler_char, summary.rho, r_flag, r_closed))

    best = min(r.rho for r in rows)
    return GenusRecord(
        dim=cx.dim,
        orientable=is_bipartite(graph),
        rows=rows,
        genus=best,
        argmin=[r.necklace for r in rows if r.rho == best],
        closed_form_used=use_closed,
        notes=notes,
    )


# -- bounds and sphere criteria -----------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    name: str
    statement: str
    holds: bool | None  # None: hypothesis not met, nothing asserted

    @property
    def status(self) -> str:
        return {True: "pass", False: "FAIL", None: "n/a"}[self.holds]


@dataclass(frozen=True)
class BoundsReport:
    dim: int
    genus: Fraction
    euler_char: int
    asserted_m: int | None
    gammas: dict[tuple[int, int], int]
    checks: list[BoundCheck]
    certificates: list[str]

    @property
    def ok(self) -> bool:
        return all(c.holds is not False for c in self.checks)

    @property
    def sphere(self) -> bool:
        return any(c.startswith("sphere") for c in self.certificates)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def verify_bounds(
    cx: ColoredComplex,
    asserted_m: int | None = None,
    record: GenusRecord | None = None,
) -> BoundsReport:
    """Instantiate the genus lower bounds and sphere criteria on ``cx``.

    The input is taken to triangulate a manifold (caller's assertion). In
    dimensions 3 and 4 the Dehn-Sommerville identity is checked first and
    sphere certificates are withheld if it fails. ``asserted_m`` is the rank
    of the fundamental group when known (0 for spheres, 1 for sphere bundles
    over the circle).
    """
    record = balanced_genus(cx) if record is None else record
    d = cx.dim
    g = record.genus
    chi = euler(cx)
    fd = len(cx.facets)
    checks: list[BoundCheck] = []
    certs: list[str] = []

    bound = 1 + Fraction(d - 3, 8) * fd
    checks.append(BoundCheck(
        "facet-count lower bound",
        f"G = {_fmt(g)} >= 1 + ({d}-3)/8 * {fd} = {_fmt(bound)}",
        g >= bound,
    ))
    bound = 1 + (d - 3) * 2 ** (d - 2)
    checks.append(BoundCheck(
        "dimension lower bound",
        f"G = {_fmt(g)} >= 1 + ({d}-3) * 2^{d - 2} = {bound}",
        g >= bound,
    ))

    manifold_ok = True
    if d in (3, 4):
        manifold_ok = dehn_sommerville_check(cx)
        checks.append(BoundCheck(
            "Dehn-Sommerville",
            "f_3 = f_1 - f_0" if d == 3 else "f_4 = 2 f_1 - 6 f_0 + 6 chi",
            manifold_ok,
        ))

    gammas = {
        (a, b): gamma(cx, (a, b)) for a in cx.palette for b in cx.palette if a < b
    }

    if manifold_ok:
        if d == 3:
            if g <= 3:
                certs.append(f"sphere: balanced genus {_fmt(g)} <= 3")
            checks.append(BoundCheck(
                "3-manifold non-sphere bound",
                f"not certified sphere => G = {_fmt(g)} >= m + 3"
                + ("" if asserted_m is None else f" = {asserted_m + 3}"),
                None if g <= 3 or asserted_m is None else g >= asserted_m + 3,
            ))
        if d == 4:
            threshold = 2 * chi + 10
            if g <= threshold:
                certs.append(f"sphere: balanced genus {_fmt(g)} <= 2*chi + 10 = {threshold}")
            rhs = None if asserted_m is None else 2 * chi + 5 * asserted_m + 11
            checks.append(BoundCheck(
                "4-manifold non-sphere bound",
                f"not certified sphere => G = {_fmt(g)} >= 2*chi + 5m + 11"
                + ("" if rhs is None else f" = {rhs}"),
                None if g <= threshold or rhs is None else g >= rhs,
            ))
        for (a, b), gv in gammas.items():
            if gv == 0:
                certs.append(f"sphere: Gamma_{a}{b} = 0 (join of a (d-2)-sphere and a cycle)")
            elif gv == 1:
                certs.append(f"sphere: Gamma_{a}{b} = 1")

    for (a, b), gv in gammas.items():
        if gv == 2:
            certs.append(f"simply connected: Gamma_{a}{b} = 2")
            if asserted_m is not None:
                checks.append(BoundCheck(
                    f"Gamma_{a}{b} = 2 forces m = 0",
                    f"asserted m = {asserted_m}",
                    asserted_m == 0,
                ))
        if gv >= 2 and asserted_m is not None:
            checks.append(BoundCheck(
                f"Gamma_{a}{b} rank bound",
                f"Gamma_{a}{b} = {gv} >= m + 2 = {asserted_m + 2}",
                gv >= asserted_m + 2,
            ))
        if gv <= 1 and asserted_m is not None:
            checks.append(BoundCheck(
                f"Gamma_{a}{b} <= 1 forces m = 0",
                f"asserted m = {asserted_m}",
                asserted_m == 0,
            ))

    return BoundsReport(
        dim=d,
        genus=g,
        euler_char=chi,
        asserted_m=asserted_m,
        gammas=gammas,
        checks=checks,
        certificates=certs,
    )
