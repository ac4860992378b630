"""Sphere bundles over the circle from one balanced handle.

A handle on an iterated connected sum of octahedral d-spheres removes two
far-apart facets and glues their boundaries by the color-preserving map.
The script prints f-vectors, orientability, the balanced genus, the
H_1-based lower bound on the rank of pi_1, and the non-sphere lower bounds
with m = 1 (m + 3 for d = 3, 2 chi + 5m + 11 for d = 4).
"""

import argparse
from dataclasses import dataclass

from balgenus.constructors import connected_sum, find_handle, handle_addition, octahedral_sphere
from balgenus.edgepath import rank_bounds
from balgenus.flags import euler, f_vector
from balgenus.genus import balanced_genus


@dataclass
class BundleConfig:
    dims: tuple[int, ...] = (3, 4)
    max_summands: int = 4


def iterated_sum(d, k):
    out = octahedral_sphere(d)
    for _ in range(k - 1):
        out = connected_sum(out, len(out.facets) - 1, octahedral_sphere(d), 0)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dims", type=int, nargs="+", default=[3, 4])
    ap.add_argument("--max-summands", type=int, default=4)
    args = ap.parse_args()
    cfg = BundleConfig(tuple(args.dims), args.max_summands)
    for d in cfg.dims:
        for k in range(2, cfg.max_summands + 1):
            base = iterated_sum(d, k)
            for twisted in (False, True):
                pair = find_handle(base, same_side=twisted)
                if pair is None:
                    print(f"d={d} summands={k} {'twisted' if twisted else 'product'}: no admissible facet pair")
                    continue
                cx = handle_addition(base, *pair)
                rec = balanced_genus(cx)
                rb = rank_bounds(cx)
                chi, m = euler(cx), 1
                bound = m + 3 if d == 3 else 2 * chi + 5 * m + 11
                print(
                    f"d={d} summands={k} {'twisted' if twisted else 'product'}: "
                    f"f={f_vector(cx)} orientable={rec.orientable} G={rec.genus} "
                    f"m>={rb.lower} non-sphere bound={bound if d in (3, 4) else '-'}"
                )


if __name__ == "__main__":
    main()
