"""Closed-form inverse identities for shifted products 1 + ab and 1 + ba.

Over compatible rectangular shapes (a n x m, b m x n) the invertibility of
1 + ab and 1 + ba is equivalent, with
    (1 + ab)^{-1} = 1 - a (1 + ba)^{-1} b
and the intertwining relations
    (1 + ab)^{-1} a = a (1 + ba)^{-1},   b (1 + ab)^{-1} = (1 + ba)^{-1} b.
There is also a constructive one-sided version: from c (1 + ab) = 1 one gets
(1 - bca)(1 + ba) = 1.
"""

from __future__ import annotations

from typing import Optional

from .errors import DimensionError
from .matrix import Matrix, invert


def _check_shapes(a: Matrix, b: Matrix):
    if a.field != b.field:
        raise DimensionError("field mismatch")
    if a.cols != b.rows or a.rows != b.cols:
        raise DimensionError(
            f"incompatible shapes {a.shape} and {b.shape}: need n x m and m x n")


def one_plus_ab_inverse(a: Matrix, b: Matrix) -> Optional[Matrix]:
    """(1 + ab)^{-1} as 1 - a (1 + ba)^{-1} b, or None when singular."""
    _check_shapes(a, b)
    n, m = a.rows, a.cols
    one_ba = Matrix.identity(a.field, m) + b @ a
    inv_ba = invert(one_ba)
    if inv_ba is None:
        return None
    return Matrix.identity(a.field, n) - a @ inv_ba @ b


def intertwining_products(a: Matrix, b: Matrix):
    """The four products whose pairwise equality witnesses the identity.

    Returns ((1+ab)^{-1} a, a (1+ba)^{-1}, b (1+ab)^{-1}, (1+ba)^{-1} b),
    or None when 1 + ab is singular.
    """
    _check_shapes(a, b)
    n, m = a.rows, a.cols
    inv_ab = invert(Matrix.identity(a.field, n) + a @ b)
    inv_ba = invert(Matrix.identity(a.field, m) + b @ a)
    if inv_ab is None or inv_ba is None:
        return None
    return (inv_ab @ a, a @ inv_ba, b @ inv_ab, inv_ba @ b)


def left_inverse_of_one_plus_ba(a: Matrix, b: Matrix, c: Matrix) -> Matrix:
    """Given c with c (1 + ab) = 1, build the left inverse 1 - bca of 1 + ba."""
    _check_shapes(a, b)
    n = a.rows
    if c.shape != (n, n):
        raise DimensionError("c must be square of the same size as ab")
    if c @ (Matrix.identity(a.field, n) + a @ b) != Matrix.identity(a.field, n):
        raise DimensionError("c is not a left inverse of 1 + ab")
    m = a.cols
    return Matrix.identity(a.field, m) - b @ c @ a
