import random
import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from balgenus.complex import build_complex
from balgenus.constructors import connected_sum, octahedral_sphere, random_connected_sum

CORPUS_SEEDS = range(20)


def corpus_shape(seed: int) -> tuple[int, int]:
    """(dimension, number of summands) for the seeded random sums."""
    return 3 + seed % 4, 2 + (seed // 4) % 2


@lru_cache(maxsize=None)
def corpus() -> tuple:
    """Octahedral spheres d = 3..6 and 20 seeded iterated connected sums."""
    items = [(f"O{d}", octahedral_sphere(d)) for d in range(3, 7)]
    for seed in CORPUS_SEEDS:
        d, k = corpus_shape(seed)
        items.append((f"sum{seed}_d{d}x{k}", random_connected_sum(d, k, random.Random(seed))))
    return tuple(items)


def hexagon():
    labels = [f"v{i}" for i in range(6)]
    facets = [[labels[i], labels[(i + 1) % 6]] for i in range(6)]
    return build_complex(facets, {lab: i % 2 for i, lab in enumerate(labels)})


@pytest.fixture
def o3():
    return octahedral_sphere(3)


@pytest.fixture
def o4():
    return octahedral_sphere(4)


@pytest.fixture
def o3sum():
    return connected_sum(octahedral_sphere(3), 0, octahedral_sphere(3), 5)


@pytest.fixture
def hex6():
    return hexagon()


def torus9():
    """The 3x3 grid torus, colored by (i + j) mod 3."""
    lab = lambda i, j: f"t{i % 3}{j % 3}"
    facets = []
    for i in range(3):
        for j in range(3):
            facets.append([lab(i, j), lab(i + 1, j), lab(i + 1, j + 1)])
            facets.append([lab(i, j), lab(i, j + 1), lab(i + 1, j + 1)])
    coloring = {lab(i, j): (i + j) % 3 for i in range(3) for j in range(3)}
    return build_complex(facets, coloring)


def iterated_sum(d: int, k: int):
    out = octahedral_sphere(d)
    for _ in range(k - 1):
        out = connected_sum(out, len(out.facets) - 1, octahedral_sphere(d), 0)
    return out


def sphere_bundle(d: int, twisted: bool, summands: int = 3):
    """Sphere bundle over the circle from one handle on an iterated sum."""
    from balgenus.constructors import find_handle, handle_addition

    base = iterated_sum(d, summands)
    return handle_addition(base, *find_handle(base, same_side=twisted))
