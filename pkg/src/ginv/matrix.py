"""Dense exact matrices with Gauss-Jordan elimination, rank and factorization.

Matrices are immutable, equality is exact entrywise equality, and zero-sized
shapes (n x 0, 0 x m, 0 x 0) are first-class so that degenerate rank
factorizations compose without special cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DimensionError
from .fields import PrimeField


class Matrix:
    """Immutable dense matrix over a fixed field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data, cols: Optional[int] = None):
        data = tuple(tuple(field.normalize(v) for v in row) for row in data)
        rows = len(data)
        if rows:
            ncols = len(data[0])
            if any(len(r) != ncols for r in data):
                raise DimensionError("ragged rows")
            if cols is not None and cols != ncols:
                raise DimensionError("cols does not match row length")
        else:
            ncols = 0 if cols is None else cols
        self.field = field
        self.rows = rows
        self.cols = ncols
        self.data = data

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, field, rows: int, cols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def diagonal(cls, field, entries) -> "Matrix":
        entries = [field.normalize(e) for e in entries]
        n = len(entries)
        zero = field.zero
        return cls(field, [[entries[i] if i == j else zero for j in range(n)]
                           for i in range(n)], cols=n)

    # -- basics -------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        zero = self.field.zero
        return all(v == zero for row in self.data for v in row)

    def is_identity(self) -> bool:
        return self.is_square() and self == Matrix.identity(self.field, self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.data)
        return f"Matrix({self.field.name}, {self.rows}x{self.cols}: [{body}])"

    def _check_same_field(self, other: "Matrix"):
        if self.field != other.field:
            raise DimensionError("field mismatch")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"add shape mismatch {self.shape} vs {other.shape}")
        norm = self.field.normalize
        return Matrix(self.field,
                      [[norm(a + b) for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"sub shape mismatch {self.shape} vs {other.shape}")
        norm = self.field.normalize
        return Matrix(self.field,
                      [[norm(a - b) for a, b in zip(r1, r2)]
                       for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def __neg__(self) -> "Matrix":
        norm = self.field.normalize
        return Matrix(self.field, [[norm(-v) for v in row] for row in self.data],
                      cols=self.cols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.cols != other.rows:
            raise DimensionError(f"matmul shape mismatch {self.shape} @ {other.shape}")
        f = self.field
        bt = list(zip(*other.data)) if other.rows else [()] * other.cols
        if isinstance(f, PrimeField):
            p = f.p
            out = [[sum(x * y for x, y in zip(row, col)) % p for col in bt]
                   for row in self.data]
        else:
            zero = f.zero
            out = [[sum((x * y for x, y in zip(row, col)), zero) for col in bt]
                   for row in self.data]
        return Matrix(f, out, cols=other.cols)

    def scaled(self, scalar) -> "Matrix":
        norm = self.field.normalize
        s = norm(scalar)
        return Matrix(self.field, [[norm(s * v) for v in row] for row in self.data],
                      cols=self.cols)

    def transpose(self) -> "Matrix":
        if not self.rows:
            return Matrix(self.field, [[] for _ in range(self.cols)], cols=0)
        return Matrix(self.field, list(zip(*self.data)), cols=self.rows)

    # -- assembly -----------------------------------------------------

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.rows != other.rows:
            raise DimensionError("hstack row mismatch")
        return Matrix(self.field,
                      [r1 + r2 for r1, r2 in zip(self.data, other.data)],
                      cols=self.cols + other.cols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_same_field(other)
        if self.cols != other.cols:
            raise DimensionError("vstack col mismatch")
        return Matrix(self.field, self.data + other.data, cols=self.cols)

    @classmethod
    def block2(cls, a11: "Matrix", a12: "Matrix", a21: "Matrix", a22: "Matrix") -> "Matrix":
        return a11.hstack(a12).vstack(a21.hstack(a22))

    def blocks2(self, n: int):
        """Split a 2n x 2n matrix into its four n x n blocks."""
        if self.shape != (2 * n, 2 * n):
            raise DimensionError("blocks2 expects a 2n x 2n matrix")
        sub = lambda r0, c0: Matrix(
            self.field, [row[c0:c0 + n] for row in self.data[r0:r0 + n]], cols=n)
        return sub(0, 0), sub(0, n), sub(n, 0), sub(n, n)

    def submatrix(self, row_indices, col_indices) -> "Matrix":
        return Matrix(self.field,
                      [[self.data[i][j] for j in col_indices] for i in row_indices],
                      cols=len(col_indices))


@dataclass(frozen=True)
class ReducedForm:
    """RREF of a matrix together with the invertible left transform.

    ``transform @ matrix == rref`` exactly; ``pivots`` are the pivot column
    indices, so ``len(pivots)`` is the rank.
    """

    rref: Matrix
    pivots: tuple
    transform: Matrix


def row_reduce(a: Matrix) -> ReducedForm:
    """Exact Gauss-Jordan elimination with first-nonzero pivoting."""
    f = a.field
    m = [list(row) for row in a.data]
    t = [list(row) for row in Matrix.identity(f, a.rows).data]
    norm = f.normalize
    pivots = []
    piv_row = 0
    for col in range(a.cols):
        # find first nonzero pivot at or below piv_row
        sel = None
        for r in range(piv_row, a.rows):
            if m[r][col] != f.zero:
                sel = r
                break
        if sel is None:
            continue
        if sel != piv_row:
            m[piv_row], m[sel] = m[sel], m[piv_row]
            t[piv_row], t[sel] = t[sel], t[piv_row]
        inv_p = f.inv(m[piv_row][col])
        m[piv_row] = [norm(inv_p * v) for v in m[piv_row]]
        t[piv_row] = [norm(inv_p * v) for v in t[piv_row]]
        for r in range(a.rows):
            if r == piv_row:
                continue
            factor = m[r][col]
            if factor == f.zero:
                continue
            m[r] = [norm(x - factor * y) for x, y in zip(m[r], m[piv_row])]
            t[r] = [norm(x - factor * y) for x, y in zip(t[r], t[piv_row])]
        pivots.append(col)
        piv_row += 1
        if piv_row == a.rows:
            break
    return ReducedForm(Matrix(f, m, cols=a.cols), tuple(pivots),
                       Matrix(f, t, cols=a.rows))


def rank(a: Matrix) -> int:
    return len(row_reduce(a).pivots)


def invert(a: Matrix) -> Optional[Matrix]:
    """Exact inverse of a square matrix, or None when singular."""
    if not a.is_square():
        raise DimensionError("invert requires a square matrix")
    if a.rows == 0:
        return Matrix(a.field, [], cols=0)
    rf = row_reduce(a)
    if len(rf.pivots) != a.rows:
        return None
    return rf.transform


def is_invertible(a: Matrix) -> bool:
    return invert(a) is not None


def matrix_power(a: Matrix, k: int) -> Matrix:
    """a^k with a^0 = identity; negative k requires a invertible."""
    if not a.is_square():
        raise DimensionError("power requires a square matrix")
    if k < 0:
        inv = invert(a)
        if inv is None:
            raise ZeroDivisionError("negative power of a singular matrix")
        return matrix_power(inv, -k)
    result = Matrix.identity(a.field, a.rows)
    base = a
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


@dataclass(frozen=True)
class RankFactorization:
    """A = F G with F of full column rank r and G of full row rank r."""

    f: Matrix
    g: Matrix
    rank: int


def full_rank_factorization(a: Matrix) -> RankFactorization:
    """F = pivot columns of A, G = nonzero rows of RREF(A)."""
    rf = row_reduce(a)
    r = len(rf.pivots)
    g = Matrix(a.field, rf.rref.data[:r], cols=a.cols)
    f = a.submatrix(range(a.rows), rf.pivots)
    return RankFactorization(f, g, r)


def left_inverse_full_col_rank(f: Matrix) -> Matrix:
    """Left inverse of a matrix with full column rank (L @ f = I)."""
    rf = row_reduce(f)
    if len(rf.pivots) != f.cols:
        raise DimensionError("matrix does not have full column rank")
    return Matrix(f.field, rf.transform.data[:f.cols], cols=f.rows)


def right_inverse_full_row_rank(g: Matrix) -> Matrix:
    """Right inverse of a matrix with full row rank (g @ R = I)."""
    return left_inverse_full_col_rank(g.transpose()).transpose()


def columns_intersect_trivially(x: Matrix, y: Matrix) -> bool:
    """Decide x*R ∩ y*R = {0} as rank([x | y]) = rank(x) + rank(y)."""
    return rank(x.hstack(y)) == rank(x) + rank(y)


def rows_intersect_trivially(x: Matrix, y: Matrix) -> bool:
    """The left-sided analogue, decided on transposes."""
    return columns_intersect_trivially(x.transpose(), y.transpose())


def columns_complementary(x: Matrix, y: Matrix) -> bool:
    """Decide x*R ∔ y*R = R^n: ranks add to n with trivial intersection."""
    n = x.rows
    return rank(x) + rank(y) == n and rank(x.hstack(y)) == n


def rows_complementary(x: Matrix, y: Matrix) -> bool:
    return columns_complementary(x.transpose(), y.transpose())
