"""Closed-form group inverses of anti-diagonal / anti-triangular 2x2 blocks.

The assemblies are the 2n x 2n matrices [[0, b], [c, 0]] and [[d, b], [c, 0]]
over M_n(F); the involution used for the idempotent specializations is plain
transpose.  Every closed form is verified against the factorization oracle on
the assembled matrix, and results carry both the four blocks and the
assembled matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .core import GroupInverseCertificate, group_inverse
from .errors import (DimensionError, HypothesisNotMet, InvariantViolation,
                     PreconditionError)
from .matrix import Matrix, invert


@dataclass(frozen=True)
class BlockSpec:
    """Square blocks d, b, c of equal size; the assembly is [[d, b], [c, 0]]."""

    d: Matrix
    b: Matrix
    c: Matrix

    def __post_init__(self):
        for m in (self.d, self.b, self.c):
            if not m.is_square() or m.shape != self.b.shape or m.field != self.b.field:
                raise DimensionError("blocks must be square, equal size, same field")

    @property
    def size(self) -> int:
        return self.b.rows

    def assembled(self) -> Matrix:
        z = Matrix.zeros(self.b.field, self.size, self.size)
        return Matrix.block2(self.d, self.b, self.c, z)


@dataclass(frozen=True)
class BlockGroupInverse:
    """A block closed form: four n x n blocks plus the assembled matrix."""

    blocks: Tuple[Tuple[Matrix, Matrix], Tuple[Matrix, Matrix]]
    assembled: Matrix
    certificate: GroupInverseCertificate


def _finish(assembly: Matrix, blocks, label: str) -> BlockGroupInverse:
    (a11, a12), (a21, a22) = blocks
    result = Matrix.block2(a11, a12, a21, a22)
    oracle = group_inverse(assembly)
    if oracle is None or oracle.inverse != result:
        raise InvariantViolation(f"{label} closed form disagrees with the oracle",
                                 assembly=assembly, formula=result)
    cert = GroupInverseCertificate(result, oracle.index,
                                   oracle.factorization_chain)
    return BlockGroupInverse(blocks, result, cert)


def _sharps_and_k(b: Matrix, c: Matrix):
    gb = group_inverse(b)
    gc = group_inverse(c)
    if gb is None or gc is None:
        raise HypothesisNotMet("b and c must both be group invertible",
                               b_ok=gb is not None, c_ok=gc is not None)
    ident = Matrix.identity(b.field, b.rows)
    k = gb.inverse @ b + gc.inverse @ c - ident
    k_inv = invert(k)
    if k_inv is None:
        raise HypothesisNotMet("k = b#b + c#c - 1 is singular", k=k)
    return gb.inverse, gc.inverse, k, k_inv


def anti_diagonal_group_inverse(b: Matrix, c: Matrix) -> BlockGroupInverse:
    """[[0, b], [c, 0]]# = [[0, k^{-1} c# k^{-1}], [k^{-1} b# k^{-1}, 0]]."""
    b_s, c_s, k, k_inv = _sharps_and_k(b, c)
    n = b.rows
    ident = Matrix.identity(b.field, n)
    z = Matrix.zeros(b.field, n, n)
    a12 = k_inv @ c_s @ k_inv
    a21 = k_inv @ b_s @ k_inv
    assembly = Matrix.block2(z, b, c, z)
    out = _finish(assembly, ((z, a12), (a21, z)), "anti-diagonal")

    # compatible projections collapse k to an involution and drop it entirely
    e, f = b_s @ b, c_s @ c
    if e @ f == e and f @ e == f:
        if k @ k != ident or k_inv != k:
            raise InvariantViolation("k^2 = 1 collapse failed", b=b, c=c, k=k)
        if a12 != e @ c_s or a21 != f @ b_s:
            raise InvariantViolation("simplified anti-diagonal form disagrees",
                                     b=b, c=c)
    return out


def _branches(spec: BlockSpec, b_s: Matrix, c_s: Matrix):
    ident = Matrix.identity(spec.b.field, spec.size)
    b_pi = ident - spec.b @ b_s
    c_pi = ident - spec.c @ c_s
    return b_pi, c_pi, (b_pi @ spec.d).is_zero(), (spec.d @ c_pi).is_zero()


def anti_triangular_group_inverse(spec: BlockSpec) -> BlockGroupInverse:
    """[[d, b], [c, 0]]# via the branch formulas for b_pi d = 0 / d c_pi = 0."""
    b, c, d = spec.b, spec.c, spec.d
    b_s, c_s, k, k_inv = _sharps_and_k(b, c)
    b_pi, c_pi, branch_bd, branch_dc = _branches(spec, b_s, c_s)
    assembly = spec.assembled()
    if not (branch_bd or branch_dc):
        oracle = group_inverse(assembly)
        raise HypothesisNotMet(
            "neither b_pi d = 0 nor d c_pi = 0; the closed form does not apply",
            assembly_group_invertible=oracle is not None)

    # simplification used inside both branch displays
    if c_s @ k_inv @ k_inv @ b_s != c_s @ k_inv @ b_s:
        raise InvariantViolation("c# k^{-2} b# = c# k^{-1} b# failed",
                                 b=b, c=c, k=k)

    n = spec.size
    ident = Matrix.identity(b.field, n)
    kc = k_inv @ c_s @ k_inv
    kb = k_inv @ b_s @ k_inv
    a22 = -(kb @ d @ kc)

    results = []
    if branch_bd:
        u = kc @ b_s @ k_inv @ d @ c_pi @ k_inv
        blocks = ((-u, kc), (kb @ (ident + d @ u), a22))
        results.append(blocks)
    if branch_dc:
        v = k_inv @ b_pi @ d @ kc @ b_s @ k_inv
        blocks = ((-v, (ident + v @ d) @ kc), (kb, a22))
        results.append(blocks)
    if len(results) == 2:
        if results[0] != results[1]:
            raise InvariantViolation("the two branch formulas disagree",
                                     spec_d=d, spec_b=b, spec_c=c)
    return _finish(assembly, results[0], "anti-triangular")


def simplified_anti_triangular(spec: BlockSpec) -> BlockGroupInverse:
    """The k-free displays valid when b#b c#c = b#b and c#c b#b = c#c."""
    b, c, d = spec.b, spec.c, spec.d
    b_s, c_s, _, _ = _sharps_and_k(b, c)
    e, f = b_s @ b, c_s @ c
    if not (e @ f == e and f @ e == f):
        raise HypothesisNotMet("compatibility identities b#b c#c = b#b, "
                               "c#c b#b = c#c fail")
    b_pi, c_pi, branch_bd, branch_dc = _branches(spec, b_s, c_s)
    if not (branch_bd or branch_dc):
        raise HypothesisNotMet("neither b_pi d = 0 nor d c_pi = 0")

    n = spec.size
    ident = Matrix.identity(b.field, n)
    a22 = -(f @ b_s @ d @ e @ c_s)
    if branch_bd:
        w = e @ c_s @ b_s @ d @ b_pi
        blocks = ((w, e @ c_s), (f @ b_s @ (ident - d @ w), a22))
    else:
        w = b_pi @ d @ e @ c_s @ b_s
        blocks = ((w, (ident - w @ d) @ e @ c_s), (f @ b_s, a22))
    out = _finish(spec.assembled(), blocks, "simplified anti-triangular")

    general = anti_triangular_group_inverse(spec)
    if general.assembled != out.assembled:
        raise InvariantViolation("simplified and general forms disagree",
                                 spec_d=d, spec_b=b, spec_c=c)
    return out


def star_idempotent_group_inverse(p: Matrix, variant: str) -> BlockGroupInverse:
    """Group inverse of [[p p*, p], [p, 0]] or [[p* p, p], [p, 0]].

    The involution * is matrix transpose; p must be a nonzero idempotent.
    ``variant`` is "pp" for p p* on the diagonal, "ps" for p* p.
    """
    if variant not in ("pp", "ps"):
        raise PreconditionError(f"unknown star variant {variant!r}")
    if not p.is_square():
        raise DimensionError("p must be square")
    if p @ p != p:
        raise PreconditionError("p is not idempotent")
    if p.is_zero():
        raise PreconditionError("p must be nonzero")
    n = p.rows
    ident = Matrix.identity(p.field, n)
    p_star = p.transpose()
    z = Matrix.zeros(p.field, n, n)
    if variant == "pp":
        d = p @ p_star
        blocks = ((d @ (ident - p), p),
                  (p - d @ d @ (ident - p), -(p @ p_star @ p)))
    else:
        d = p_star @ p
        blocks = (((ident - p) @ d, p - (ident - p) @ d @ d),
                  (p, -(p @ p_star @ p)))
    assembly = Matrix.block2(d, p, p, z)
    return _finish(assembly, blocks, f"star idempotent ({variant})")
