"""Oracle computation of {1}-, {1,2}-, group and Drazin inverses.

The rank-factorization route is the ground truth: for a = F G with F of full
column rank and G of full row rank, the product of a right inverse of G and a
left inverse of F is a {1,2}-inverse, the group inverse exists iff G F is
invertible (and then a# = F (GF)^{-2} G), and the Drazin inverse is
(a^l)# a^{l-1} for any l at least the index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import (DimensionError, HypothesisNotMet, InvariantViolation,
                     PreconditionError)
from .matrix import (Matrix, RankFactorization, full_rank_factorization,
                     invert, left_inverse_full_col_rank, matrix_power, rank,
                     right_inverse_full_row_rank)


@dataclass(frozen=True)
class GroupInverseCertificate:
    """A group/Drazin inverse with the evidence that it is correct."""

    inverse: Matrix
    index: int
    factorization_chain: Tuple[RankFactorization, ...] = ()


def _require_square(a: Matrix):
    if not a.is_square():
        raise DimensionError("expected a square matrix")


def index_of(a: Matrix) -> int:
    """Smallest k >= 0 with rank(a^k) = rank(a^{k+1}), a^0 = identity."""
    _require_square(a)
    prev = a.rows  # rank of a^0
    power = Matrix.identity(a.field, a.rows)
    k = 0
    while True:
        power = power @ a
        cur = rank(power)
        if cur == prev:
            return k
        prev = cur
        k += 1


def one_inverse(a: Matrix) -> Matrix:
    """Some b with a b a = a; every matrix over a field is regular."""
    return reflexive_ginv(a)


def reflexive_ginv(a: Matrix) -> Matrix:
    """The canonical {1,2}-inverse built from the RREF rank factorization."""
    _require_square(a)
    frf = full_rank_factorization(a)
    if frf.rank == 0:
        return Matrix.zeros(a.field, a.rows, a.rows)
    g_right = right_inverse_full_row_rank(frf.g)
    f_left = left_inverse_full_col_rank(frf.f)
    b = g_right @ f_left
    if a @ b @ a != a or b @ a @ b != b:
        raise InvariantViolation("rank-factorization {1,2}-inverse failed axioms",
                                 a=a, b=b)
    return b


def perturb_reflexive(a: Matrix, a_plus: Matrix, w: Matrix) -> Matrix:
    """Another {1,2}-inverse: b' = b + (1 - ba) w (1 - ab), then b' a b'."""
    _require_square(a)
    ident = Matrix.identity(a.field, a.rows)
    b1 = a_plus + (ident - a_plus @ a) @ w @ (ident - a @ a_plus)
    b2 = b1 @ a @ b1
    if a @ b2 @ a != a or b2 @ a @ b2 != b2:
        raise InvariantViolation("perturbed {1,2}-inverse failed axioms",
                                 a=a, b=b2)
    return b2


def is_reflexive_ginv(a: Matrix, b: Matrix) -> bool:
    return a @ b @ a == a and b @ a @ b == b


def group_inverse(a: Matrix) -> Optional[GroupInverseCertificate]:
    """a# via a = FG: exists iff GF is invertible, then a# = F (GF)^{-2} G."""
    _require_square(a)
    frf = full_rank_factorization(a)
    gf = frf.g @ frf.f
    gf_inv = invert(gf)
    if gf_inv is None:
        return None
    sharp = frf.f @ gf_inv @ gf_inv @ frf.g
    idx = 0 if frf.rank == a.rows else 1
    if a @ sharp @ a != a or sharp @ a @ sharp != sharp or a @ sharp != sharp @ a:
        raise InvariantViolation("group inverse failed its axioms", a=a, b=sharp)
    return GroupInverseCertificate(sharp, idx, (frf,))


def is_group_invertible(a: Matrix) -> bool:
    return rank(a) == rank(a @ a)


def drazin_inverse(a: Matrix) -> GroupInverseCertificate:
    """a^D = (a^l)# a^{l-1} with l = max(index, 1); always exists."""
    _require_square(a)
    s = index_of(a)
    l = max(s, 1)
    al = matrix_power(a, l)
    cert = group_inverse(al)
    if cert is None:
        raise InvariantViolation("a^l not group invertible at l >= index", a=a, l=l)
    ad = cert.inverse @ matrix_power(a, l - 1)
    ak = matrix_power(a, s)
    if ak @ ad @ a != ak or ad @ a @ ad != ad or a @ ad != ad @ a:
        raise InvariantViolation("Drazin inverse failed its axioms", a=a, b=ad)
    return GroupInverseCertificate(ad, s, cert.factorization_chain)


def group_from_reflexive(a: Matrix, a_plus: Matrix) -> GroupInverseCertificate:
    """a# = a+ s^{-1} + (1 - a+ a) s^{-1} a+ s^{-1} for s = a+a + aa+ - 1."""
    _require_square(a)
    if not is_reflexive_ginv(a, a_plus):
        raise PreconditionError("a_plus is not a {1,2}-inverse of a")
    ident = Matrix.identity(a.field, a.rows)
    p = a_plus @ a
    q = a @ a_plus
    s = p + q - ident
    s_inv = invert(s)
    if s_inv is None:
        raise HypothesisNotMet("a+a + aa+ - 1 is singular", s=s)
    sharp = a_plus @ s_inv + (ident - p) @ s_inv @ a_plus @ s_inv
    # the auxiliary identities the closed form rides on
    if not (p @ s == p @ q == s @ q and q @ s == q @ p == s @ p
            and s @ a == a_plus @ a @ a):
        raise InvariantViolation("auxiliary p/q/s identities failed", a=a,
                                 a_plus=a_plus)
    oracle = group_inverse(a)
    if oracle is None or oracle.inverse != sharp:
        raise InvariantViolation("closed form disagrees with the oracle a#",
                                 a=a, a_plus=a_plus, formula=sharp)
    return GroupInverseCertificate(sharp, oracle.index, oracle.factorization_chain)


def _check_split_idempotent(p: Matrix):
    _require_square(p)
    if p @ p != p:
        raise PreconditionError("p is not idempotent")
    if p.is_zero() or p.is_identity():
        raise PreconditionError("p must be a non-trivial idempotent")


def assemble_split(p: Matrix, a: Matrix, b: Matrix) -> Matrix:
    ident = Matrix.identity(p.field, p.rows)
    return p @ a @ p + p @ b @ (ident - p)


def split_group_inverse(p: Matrix, a: Matrix,
                        b: Matrix) -> Optional[GroupInverseCertificate]:
    """Group inverse of x = pap + pb(1-p) as (pap)# + [(pap)#]^2 pb(1-p).

    Returns None when (pap)# is missing or the compatibility condition
    (pap)(pap)# b (1-p) = p b (1-p) fails (then x is not group invertible
    by the converse direction).
    """
    _check_split_idempotent(p)
    ident = Matrix.identity(p.field, p.rows)
    pap = p @ a @ p
    tail = p @ b @ (ident - p)
    cert = group_inverse(pap)
    if cert is None:
        return None
    if pap @ cert.inverse @ b @ (ident - p) != tail:
        return None
    x = pap + tail
    sharp = cert.inverse + cert.inverse @ cert.inverse @ tail
    oracle = group_inverse(x)
    if oracle is None or oracle.inverse != sharp:
        raise InvariantViolation("split closed form disagrees with the oracle",
                                 p=p, a=a, b=b, formula=sharp)
    return GroupInverseCertificate(sharp, oracle.index, oracle.factorization_chain)


def split_group_inverse_converse(x: Matrix, p: Matrix) -> GroupInverseCertificate:
    """From x# with x = pxp + px(1-p), extract (pxp)# = p x# p.

    Also asserts the compatibility condition (pxp)(pxp)# px(1-p) = px(1-p).
    """
    _check_split_idempotent(p)
    if x.shape != p.shape:
        raise DimensionError("x and p must have the same shape")
    ident = Matrix.identity(p.field, p.rows)
    if (ident - p) @ x != Matrix.zeros(p.field, p.rows, p.rows):
        raise PreconditionError("x is not of the form pap + pb(1-p)")
    cert = group_inverse(x)
    if cert is None:
        raise HypothesisNotMet("x is not group invertible", x=x)
    pxp = p @ x @ p
    y1 = p @ cert.inverse @ p
    tail = p @ x @ (ident - p)
    if (pxp @ y1 @ pxp != pxp or y1 @ pxp @ y1 != y1 or pxp @ y1 != y1 @ pxp
            or pxp @ y1 @ tail != tail):
        raise InvariantViolation("converse extraction failed its identities",
                                 x=x, p=p)
    idx = index_of(pxp)
    return GroupInverseCertificate(y1, idx)
