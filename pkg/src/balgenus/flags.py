"""Face numbers: f/h-vectors, flag f/h-numbers, Euler characteristic, Gamma_S.

Color sets are bitmasks over the complex's palette. ``f^{ij}_{d-2}`` (the
number of codimension-2 faces missing colors i and j) is the flag number of
the complementary color set and is exposed as :func:`codim2_count`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable

from .complex import ColoredComplex
from .errors import BadArity, ColorOutOfRange, UnsupportedDimension


def color_mask(cx: ColoredComplex, colors: Iterable[int]) -> int:
    """Bitmask for a color set, checked against the palette."""
    allowed = set(cx.palette)
    mask = 0
    for c in colors:
        if c not in allowed:
            raise ColorOutOfRange(f"color {c} not in palette {cx.palette}")
        mask |= 1 << c
    return mask


def mask_colors(mask: int) -> tuple[int, ...]:
    out, c = [], 0
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return tuple(out)


def full_mask(cx: ColoredComplex) -> int:
    return color_mask(cx, cx.palette)


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class FlagVectors:
    dim: int
    palette: tuple[int, ...]
    flag_f: dict[int, int]
    flag_h: dict[int, int]
    f: tuple[int, ...]  # f_{-1}, ..., f_d
    h: tuple[int, ...]  # h_0, ..., h_{d+1}
    euler: int


def _flag_f_table(cx: ColoredComplex) -> dict[int, int]:
    table = getattr(cx, "_flag_f_cache", None)
    if table is None:
        counts: dict[int, int] = {}
        for k in range(-1, cx.dim + 1):
            for face in cx.faces(k):
                m = cx.color_mask(face)
                counts[m] = counts.get(m, 0) + 1
        full = full_mask(cx)
        table = {s: counts.get(s, 0) for s in _submasks(full)}
        cx._flag_f_cache = table
    return table


def flag_f(cx: ColoredComplex, colors: Iterable[int]) -> int:
    """Number of faces whose color set is exactly ``colors``."""
    return _flag_f_table(cx)[color_mask(cx, colors)]


def flag_f_mask(cx: ColoredComplex, mask: int) -> int:
    return _flag_f_table(cx)[mask]


def flag_h(cx: ColoredComplex, colors: Iterable[int]) -> int:
    return flag_h_mask(cx, color_mask(cx, colors))


def flag_h_mask(cx: ColoredComplex, mask: int) -> int:
    table = _flag_f_table(cx)
    size = bin(mask).count("1")
    return sum(
        (-1) ** (size - bin(s).count("1")) * table[s] for s in _submasks(mask)
    )


def codim2_count(cx: ColoredComplex, i: int, j: int) -> int:
    """f^{ij}_{d-2}: faces colored by every color except i and j."""
    if i == j:
        raise BadArity("need two distinct colors")
    return flag_f_mask(cx, full_mask(cx) & ~color_mask(cx, (i, j)))


def f_vector(cx: ColoredComplex) -> tuple[int, ...]:
    """(f_{-1}, f_0, ..., f_d)."""
    return tuple(cx.f_count(k) for k in range(-1, cx.dim + 1))


def h_vector(cx: ColoredComplex) -> tuple[int, ...]:
    """(h_0, ..., h_{d+1}) from the f-vector."""
    f = f_vector(cx)
    n = cx.dim + 1
    return tuple(
        sum((-1) ** (i - j) * comb(n - j, i - j) * f[j] for j in range(i + 1))
        for i in range(n + 1)
    )


def euler(cx: ColoredComplex) -> int:
    """Alternating sum of f_i over i >= 0 (unreduced)."""
    return sum((-1) ** k * cx.f_count(k) for k in range(cx.dim + 1))


def flag_vectors(cx: ColoredComplex) -> FlagVectors:
    table = _flag_f_table(cx)
    return FlagVectors(
        dim=cx.dim,
        palette=cx.palette,
        flag_f=dict(table),
        flag_h={s: flag_h_mask(cx, s) for s in table},
        f=f_vector(cx),
        h=h_vector(cx),
        euler=euler(cx),
    )


def gamma(cx: ColoredComplex, colors: Iterable[int]) -> int:
    """Gamma_{pq} = f_{pq} - f_p - f_q, the cycle rank of the graph Delta_{pq}."""
    colors = tuple(colors)
    if len(set(colors)) != 2 or len(colors) != 2:
        raise BadArity(f"gamma needs exactly two colors, got {colors}")
    p, q = colors
    return flag_f(cx, (p, q)) - flag_f(cx, (p,)) - flag_f(cx, (q,))


def sphere_euler(d: int) -> int:
    return 1 + (-1) ** d


def dehn_sommerville_check(cx: ColoredComplex, chi: int | None = None) -> bool:
    """f_3 = f_1 - f_0 in dimension 3; f_4 = 2 f_1 - 6 f_0 + 6 chi in dimension 4."""
    f = f_vector(cx)[1:]
    if cx.dim == 3:
        return f[3] == f[1] - f[0]
    if cx.dim == 4:
        chi = euler(cx) if chi is None else chi
        return f[4] == 2 * f[1] - 6 * f[0] + 6 * chi
    raise UnsupportedDimension(f"Dehn-Sommerville check covers d=3,4, not {cx.dim}")


def swartz_check(cx: ColoredComplex, colors: Iterable[int]) -> bool:
    """h_{[d]-S} - h_S == (-1)^|S| (chi - chi(S^d)) for balanced semi-Eulerian complexes."""
    mask = color_mask(cx, colors)
    comp = full_mask(cx) & ~mask
    lhs = flag_h_mask(cx, comp) - flag_h_mask(cx, mask)
    rhs = (-1) ** bin(mask).count("1") * (euler(cx) - sphere_euler(cx.dim))
    return lhs == rhs


def h_pair_symmetry_check(cx: ColoredComplex) -> bool:
    """For balanced 3-manifolds: h_S == h_{[3]-S} for every two-element S."""
    if cx.dim != 3:
        raise UnsupportedDimension("pair symmetry applies to d=3 only")
    full = full_mask(cx)
    return all(
        flag_h_mask(cx, s) == flag_h_mask(cx, full & ~s)
        for s in _flag_f_table(cx)
        if bin(s).count("1") == 2
    )


def all_masks(cx: ColoredComplex, size: int | None = None) -> list[int]:
    masks = sorted(_flag_f_table(cx))
    if size is None:
        return masks
    return [m for m in masks if bin(m).count("1") == size]
