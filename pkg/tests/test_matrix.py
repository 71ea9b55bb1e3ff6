import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gf, minor_rank, q_matrix
from ginv.errors import DimensionError
from ginv.matrix import (Matrix, full_rank_factorization, invert,
                         left_inverse_full_col_rank, matrix_power, rank,
                         right_inverse_full_row_rank, row_reduce)


def gf_matrices(p=5, max_n=4, square=True):
    field = gf(p)

    @st.composite
    def mats(draw):
        n = draw(st.integers(1, max_n))
        m = n if square else draw(st.integers(1, max_n))
        rows = [[draw(st.integers(0, p - 1)) for _ in range(m)]
                for _ in range(n)]
        return Matrix(field, rows, cols=m)

    return mats()


class TestInvert:
    def test_identity(self):
        a = q_matrix([[1, 0], [0, 1]])
        assert invert(a) == a

    def test_unipotent(self):
        a = q_matrix([[1, 1], [0, 1]])
        assert invert(a) == q_matrix([[1, -1], [0, 1]])

    def test_singular_nilpotent(self):
        assert invert(q_matrix([[0, 1], [0, 0]])) is None

    def test_gf5_scalar(self):
        f = gf(5)
        assert invert(Matrix(f, [[2]])) == Matrix(f, [[3]])

    def test_non_square_raises(self):
        with pytest.raises(DimensionError):
            invert(q_matrix([[1, 2]]))

    def test_zero_size(self):
        f = gf(5)
        empty = Matrix(f, [], cols=0)
        assert invert(empty) == empty


class TestRank:
    def test_zero(self):
        assert rank(q_matrix([[0] * 3] * 3)) == 0

    def test_identity(self):
        assert rank(Matrix.identity(gf(7), 4)) == 4

    def test_proportional_rows(self):
        assert rank(q_matrix([[1, 2], [2, 4]])) == 1

    @settings(max_examples=60)
    @given(gf_matrices(square=False))
    def test_matches_minor_rank_oracle(self, a):
        assert rank(a) == minor_rank(a)


class TestFullRankFactorization:
    def test_rank_one(self):
        a = q_matrix([[1, 2], [2, 4]])
        frf = full_rank_factorization(a)
        assert frf.f == q_matrix([[1], [2]])
        assert frf.g == q_matrix([[1, 2]])
        assert frf.rank == 1 == rank(frf.f) == rank(frf.g)
        assert frf.f @ frf.g == a

    def test_zero_matrix_degenerate(self):
        a = q_matrix([[0, 0], [0, 0]])
        frf = full_rank_factorization(a)
        assert frf.rank == 0
        assert frf.f.shape == (2, 0)
        assert frf.g.shape == (0, 2)
        assert frf.f @ frf.g == a

    def test_identity(self):
        i3 = Matrix.identity(gf(3), 3)
        frf = full_rank_factorization(i3)
        assert frf.f == i3 and frf.g == i3

    @settings(max_examples=60)
    @given(gf_matrices(square=False))
    def test_reconstructs_exactly(self, a):
        frf = full_rank_factorization(a)
        assert frf.f @ frf.g == a
        assert frf.rank == rank(a)
        assert rank(frf.f) == rank(frf.g) == frf.rank


class TestOneSidedInverses:
    def test_left_and_right(self):
        f = q_matrix([[1], [2]])
        lf = left_inverse_full_col_rank(f)
        assert lf @ f == Matrix.identity(f.field, 1)
        g = q_matrix([[1, 2]])
        rg = right_inverse_full_row_rank(g)
        assert g @ rg == Matrix.identity(g.field, 1)


class TestRowReduce:
    @settings(max_examples=60)
    @given(gf_matrices(square=False))
    def test_transform_witnesses_rref(self, a):
        rf = row_reduce(a)
        assert rf.transform @ a == rf.rref
        assert invert(rf.transform) is not None


class TestPower:
    def test_power_zero_is_identity(self):
        a = q_matrix([[2, 1], [0, 3]])
        assert matrix_power(a, 0) == Matrix.identity(a.field, 2)

    def test_negative_power(self):
        a = q_matrix([[2, 0], [0, 4]])
        assert matrix_power(a, -1) == invert(a)
        assert matrix_power(a, -2) == invert(a) @ invert(a)

    def test_negative_power_singular_raises(self):
        with pytest.raises(ZeroDivisionError):
            matrix_power(q_matrix([[0, 1], [0, 0]]), -1)


@settings(max_examples=60)
@given(gf_matrices(p=7, max_n=4))
def test_invertibility_iff_full_rank(a):
    inv = invert(a)
    assert (inv is not None) == (rank(a) == a.rows)
    if inv is not None:
        ident = Matrix.identity(a.field, a.rows)
        assert a @ inv == ident == inv @ a


def test_field_mismatch_raises():
    with pytest.raises(DimensionError):
        Matrix.identity(gf(5), 2) @ Matrix.identity(gf(7), 2)
