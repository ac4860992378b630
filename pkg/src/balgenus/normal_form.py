"""Smith normal form over the integers (invariant factors only)."""

from __future__ import annotations

from typing import Sequence


def invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.

    Exact, using Python integers. The matrix is copied, not modified.
    """
    a = [list(map(int, row)) for row in matrix]
    a = [row for row in a if any(row)]
    if not a:
        return []
    m, n = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the trailing block as pivot
        best = None
        for i in range(t, m):
            row = a[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        a[t], a[i] = a[i], a[t]
        if j != t:
            for row in a:
                row[t], row[j] = row[j], row[t]

        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, m):
                x = a[i][t]
                if x:
                    q = x // p
                    ri, rt = a[i], a[t]
                    for j in range(t, n):
                        if rt[j]:
                            ri[j] -= q * rt[j]
                    if ri[t]:
                        done = False
            rt = a[t]
            for j in range(t + 1, n):
                x = rt[j]
                if x:
                    q = x // p
                    for row in a:
                        if row[t]:
                            row[j] -= q * row[t]
                    if rt[j]:
                        done = False
            if done:
                bad = next(
                    (
                        i
                        for i in range(t + 1, m)
                        if any(a[i][j] % p for j in range(t + 1, n))
                    ),
                    None,
                )
                if bad is None:
                    break
                # restore divisibility: fold the offending row into the pivot row
                rt, rb = a[t], a[bad]
                for j in range(t, n):
                    rt[j] += rb[j]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]]
            _, i, j = min(cands)
            a[t], a[i] = a[i], a[t]
            if j != t:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def abelian_invariants(matrix: Sequence[Sequence[int]], num_generators: int) -> tuple[int, list[int]]:
    """(free rank, torsion coefficients > 1) of Z^n modulo the row span."""
    factors = invariant_factors(matrix) if num_generators else []
    torsion = [f for f in factors if f > 1]
    return num_generators - len(factors), torsion


def minimal_generators(matrix: Sequence[Sequence[int]], num_generators: int) -> int:
    """Minimal number of generators of the abelian group presented by ``matrix``."""
    free, torsion = abelian_invariants(matrix, num_generators)
    return free + len(torsion)

