from itertools import combinations

import pytest

import oracles
from conftest import torus9
from balgenus.errors import BadArity, ColorOutOfRange, UnsupportedDimension
from balgenus.flags import (
    codim2_count,
    dehn_sommerville_check,
    euler,
    f_vector,
    flag_f,
    flag_h,
    flag_vectors,
    gamma,
    h_pair_symmetry_check,
    h_vector,
    swartz_check,
)


def subsets(colors):
    for k in range(len(colors) + 1):
        yield from combinations(colors, k)


def test_octahedral_flag_numbers(o3):
    for S in subsets(range(4)):
        assert flag_f(o3, S) == 2 ** len(S)
        assert flag_h(o3, S) == 1


def test_flag_numbers_match_oracle(o3sum):
    for S in subsets(range(4)):
        assert flag_f(o3sum, S) == oracles.flag_f(o3sum, S)
        assert flag_h(o3sum, S) == oracles.flag_h(o3sum, S)


def test_h_vector_is_sum_of_flag_h(o3sum, o4):
    """h_i is the sum of h_S over |S| = i."""
    for cx in (o3sum, o4):
        h = h_vector(cx)
        for i in range(cx.dim + 2):
            assert h[i] == sum(flag_h(cx, S) for S in combinations(cx.palette, i))


def test_f_vector_and_euler(o3sum, o4):
    assert list(f_vector(o3sum)) == oracles.f_vector(o3sum)
    assert f_vector(o3sum) == (1, 12, 42, 60, 30)
    assert euler(o3sum) == oracles.euler(o3sum) == 0
    assert euler(o4) == 2


def test_gamma(o3, o3sum):
    assert gamma(o3, (0, 1)) == 0
    assert all(gamma(o3sum, p) == 1 for p in combinations(range(4), 2))
    with pytest.raises(BadArity):
        gamma(o3, (0,))
    with pytest.raises(BadArity):
        gamma(o3, (1, 1))


def test_codim2_count_is_complementary_flag(o3sum):
    assert codim2_count(o3sum, 0, 1) == flag_f(o3sum, (2, 3))
    with pytest.raises(BadArity):
        codim2_count(o3sum, 2, 2)


def test_color_out_of_range(o3):
    with pytest.raises(ColorOutOfRange):
        flag_f(o3, (7,))


def test_dehn_sommerville(o3, o3sum, o4):
    assert dehn_sommerville_check(o3)
    assert dehn_sommerville_check(o3sum)
    assert dehn_sommerville_check(o4)
    with pytest.raises(UnsupportedDimension):
        dehn_sommerville_check(torus9())


def test_swartz_on_spheres_and_torus(o3sum, o4):
    for cx in (o3sum, o4, torus9()):
        for S in subsets(cx.palette):
            assert swartz_check(cx, S)


def test_torus_values():
    t = torus9()
    assert f_vector(t) == (1, 9, 27, 18)
    assert euler(t) == 0
    # chi is 2 less than for the 2-sphere
    assert flag_h(t, (0, 1, 2)) - flag_h(t, ()) == -2
    assert flag_h(t, (1, 2)) - flag_h(t, (0,)) == 2


def test_pair_symmetry(o3sum):
    assert h_pair_symmetry_check(o3sum)
    with pytest.raises(UnsupportedDimension):
        h_pair_symmetry_check(torus9())


def test_flag_vectors_bundle(o3sum):
    fv = flag_vectors(o3sum)
    assert fv.f == f_vector(o3sum)
    assert sum(fv.flag_f[m] for m in fv.flag_f if bin(m).count("1") == 1) == 12
