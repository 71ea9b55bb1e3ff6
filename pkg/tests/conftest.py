"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's row-reduction route:
rank via minors, inverses via brute-force search over tiny fields, so the
tests check the implementation against genuinely different computations.
"""

import itertools
import random
from fractions import Fraction

import pytest

from ginv.fields import PrimeField, Rationals
from ginv.matrix import Matrix


def minor_rank(m: Matrix) -> int:
    """Rank as the largest r with a nonzero r x r minor (Laplace determinants)."""

    def det(rows, cols):
        if not rows:
            return m.field.one
        r0 = rows[0]
        total = m.field.zero
        sign = 1
        for idx, c in enumerate(cols):
            sub = det(rows[1:], cols[:idx] + cols[idx + 1:])
            term = m.field.normalize(m.data[r0][c] * sub)
            total = m.field.normalize(total + term if sign > 0 else total - term)
            sign = -sign
        return total

    best = 0
    for r in range(1, min(m.rows, m.cols) + 1):
        found = False
        for rows in itertools.combinations(range(m.rows), r):
            for cols in itertools.combinations(range(m.cols), r):
                if det(list(rows), list(cols)) != m.field.zero:
                    found = True
                    break
            if found:
                break
        if found:
            best = r
        else:
            break
    return best


def all_matrices(fld, n):
    """Every n x n matrix over GF(p); only sane for tiny p and n."""
    p = fld.p
    for digits in itertools.product(range(p), repeat=n * n):
        yield Matrix(fld, [digits[i * n:(i + 1) * n] for i in range(n)], cols=n)


def brute_force_group_inverse(a: Matrix):
    """Search all candidates for the three group-inverse axioms."""
    for b in all_matrices(a.field, a.rows):
        if a @ b @ a == a and b @ a @ b == b and a @ b == b @ a:
            return b
    return None


def brute_force_drazin(a: Matrix, index: int):
    """Search all candidates for the three Drazin axioms at the given index."""
    from ginv.matrix import matrix_power
    ak = matrix_power(a, index)
    for b in all_matrices(a.field, a.rows):
        if ak @ b @ a == ak and b @ a @ b == b and a @ b == b @ a:
            return b
    return None


def q_matrix(rows):
    return Matrix(Rationals(), [[Fraction(v) for v in row] for row in rows])


def gf(p):
    return PrimeField(p)


@pytest.fixture
def rng():
    return random.Random(20240817)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
