"""Shifted-product inverse identities, including the spec's worked examples."""

import pytest

from conftest import gf, q_matrix
from ginv.errors import DimensionError
from ginv.fuzz import rand_matrix
from ginv.identities import (intertwining_products,
                             left_inverse_of_one_plus_ba, one_plus_ab_inverse)
from ginv.matrix import Matrix, invert


def test_scalar_case():
    a = q_matrix([[2]])
    b = q_matrix([[3]])
    res = one_plus_ab_inverse(a, b)
    assert res == q_matrix([["1/7"]]) == invert(q_matrix([[7]]))


def test_nilpotent_pair_matches_direct_inverse():
    a = q_matrix([[0, 1], [0, 0]])
    b = q_matrix([[0, 0], [1, 0]])
    res = one_plus_ab_inverse(a, b)
    direct = invert(Matrix.identity(a.field, 2) + a @ b)
    assert res == direct == q_matrix([["1/2", 0], [0, 1]])


def test_b_zero_gives_identity():
    a = q_matrix([[3, 1], [2, 5]])
    b = q_matrix([[0, 0], [0, 0]])
    assert one_plus_ab_inverse(a, b) == Matrix.identity(a.field, 2)


def test_rectangular_shapes():
    f = gf(5)
    a = Matrix(f, [[1, 2], [3, 4], [0, 1]])       # 3x2
    b = Matrix(f, [[1, 0, 2], [2, 1, 0]])          # 2x3
    res = one_plus_ab_inverse(a, b)
    direct = invert(Matrix.identity(f, 3) + a @ b)
    assert res == direct


def test_singular_returns_none_both_ways():
    a = q_matrix([[-1]])
    b = q_matrix([[1]])
    assert one_plus_ab_inverse(a, b) is None
    assert one_plus_ab_inverse(b, a) is None
    assert intertwining_products(a, b) is None


def test_shape_mismatch_raises():
    with pytest.raises(DimensionError):
        one_plus_ab_inverse(q_matrix([[1, 2]]), q_matrix([[1, 2]]))


def test_constructive_left_inverse(rng):
    f = gf(7)
    for _ in range(50):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        a = rand_matrix(rng, f, n, m)
        b = rand_matrix(rng, f, m, n)
        c = invert(Matrix.identity(f, n) + a @ b)
        if c is None:
            assert invert(Matrix.identity(f, m) + b @ a) is None
            continue
        left = left_inverse_of_one_plus_ba(a, b, c)
        assert left @ (Matrix.identity(f, m) + b @ a) == Matrix.identity(f, m)


def test_intertwining_identities(rng):
    f = gf(5)
    for _ in range(50):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        a = rand_matrix(rng, f, n, m)
        b = rand_matrix(rng, f, m, n)
        prods = intertwining_products(a, b)
        if prods is None:
            continue
        assert prods[0] == prods[1]
        assert prods[2] == prods[3]
