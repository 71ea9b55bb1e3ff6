"""Seeded fuzzing harness mechanizing the identity suites.

Every suite draws each trial from its own Mersenne Twister stream seeded with
the string ``"{seed}:{suite}:{trial}"``, so reports are reproducible and
order-independent; counterexamples are emitted in the input-document format
so they replay through the CLI.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import blocks, core, identities, perturbation
from .errors import GinvError, InputError
from .fields import PrimeField, Rationals
from .iojson import dumps_canonical, field_to_json, matrix_to_json
from .matrix import Matrix, invert, matrix_power, rank

RETRIES = 400


@dataclass(frozen=True)
class FuzzReport:
    suite: str
    field: object
    dim: int
    trials: int
    passes: int
    failures: List[dict]
    seed: int

    def to_json(self):
        return {"suite": self.suite, "field": field_to_json(self.field),
                "dim": self.dim, "trials": self.trials, "passes": self.passes,
                "failures": self.failures, "seed": self.seed}


def _payload(assertion: str, fld, **mats) -> dict:
    return {"assertion": assertion,
            "inputs": {"field": field_to_json(fld),
                       "matrices": {k: matrix_to_json(m)
                                    for k, m in mats.items()}}}


# ---------------------------------------------------------------------------
# samplers


def rand_matrix(rng: random.Random, fld, r: int, c: int) -> Matrix:
    if isinstance(fld, PrimeField):
        p = fld.p
        return Matrix(fld, [[rng.randrange(p) for _ in range(c)]
                            for _ in range(r)], cols=c)
    return Matrix(fld, [[Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                         for _ in range(c)] for _ in range(r)], cols=c)


def rand_square(rng, fld, n):
    return rand_matrix(rng, fld, n, n)


def rand_invertible(rng, fld, n) -> Matrix:
    for _ in range(RETRIES):
        m = rand_square(rng, fld, n)
        if invert(m) is not None:
            return m
    return Matrix.identity(fld, n)


def rand_group_invertible(rng, fld, n) -> Matrix:
    for _ in range(RETRIES):
        m = rand_square(rng, fld, n)
        if core.is_group_invertible(m):
            return m
    return Matrix.identity(fld, n)


def rand_idempotent(rng, fld, n) -> Matrix:
    """A random non-trivial idempotent via conjugating diag(1..1, 0..0)."""
    r = rng.randrange(1, n) if n > 1 else 1
    g = rand_invertible(rng, fld, n)
    diag = Matrix.diagonal(fld, [fld.one] * r + [fld.zero] * (n - r))
    g_inv = invert(g)
    return g @ diag @ g_inv


def rand_group_invertible_with_projector(rng, fld, n, proj_g=None) -> Matrix:
    """Group-invertible matrix m with m m# = g diag(I_r, 0) g^{-1}."""
    r = rng.randrange(1, n + 1)
    g = proj_g if proj_g is not None else rand_invertible(rng, fld, n)
    s = rand_invertible(rng, fld, r)
    z1 = Matrix.zeros(fld, r, n - r)
    z2 = Matrix.zeros(fld, n - r, r)
    z3 = Matrix.zeros(fld, n - r, n - r)
    inner = Matrix.block2(s, z1, z2, z3) if n > r else s
    return g @ inner @ invert(g)


# ---------------------------------------------------------------------------
# suites: each returns None (pass) or a failure payload


def suite_lemma23(rng, fld, n) -> Optional[dict]:
    a = rand_square(rng, fld, n)
    a_plus = core.reflexive_ginv(a)
    candidates = [a_plus,
                  core.perturb_reflexive(a, a_plus, rand_square(rng, fld, n))]
    for cand in candidates:
        ident = Matrix.identity(fld, n)
        s = cand @ a + a @ cand - ident
        if invert(s) is None:
            continue
        try:
            core.group_from_reflexive(a, cand)
        except GinvError as exc:
            return _payload(f"lemma23: {exc}", fld, a=a, a_plus=cand)
    return None


def suite_lemma25(rng, fld, n) -> Optional[dict]:
    if n < 2:
        return None
    p = rand_idempotent(rng, fld, n)
    a = rand_square(rng, fld, n)
    b = rand_square(rng, fld, n)
    try:
        cert = core.split_group_inverse(p, a, b)
    except GinvError as exc:
        return _payload(f"lemma25 direct: {exc}", fld, p=p, a=a, b=b)
    x = core.assemble_split(p, a, b)
    if cert is None:
        # converse: x must not be group invertible, unless x is trivial for p
        if core.is_group_invertible(x):
            pap = p @ a @ p
            papc = core.group_inverse(pap)
            ident = Matrix.identity(fld, n)
            tail = p @ b @ (ident - p)
            if papc is not None and pap @ papc.inverse @ b @ (ident - p) == tail:
                return _payload("lemma25: formula refused a valid instance",
                                fld, p=p, a=a, b=b)
            return _payload("lemma25 converse: x# exists but hypotheses fail",
                            fld, p=p, a=a, b=b)
        return None
    try:
        back = core.split_group_inverse_converse(x, p)
    except GinvError as exc:
        return _payload(f"lemma25 converse: {exc}", fld, p=p, a=a, b=b)
    pap = p @ a @ p
    oracle = core.group_inverse(pap)
    if oracle is None or oracle.inverse != back.inverse:
        return _payload("lemma25: p x# p is not (pap)#", fld, p=p, a=a, b=b)
    return None


def suite_lemma31(rng, fld, n) -> Optional[dict]:
    for _ in range(RETRIES):
        a = rand_group_invertible(rng, fld, n)
        delta = rand_square(rng, fld, n)
        try:
            ctx = perturbation.build_context(a, delta)
        except GinvError:
            continue
        try:
            perturbation.ba_group_inverse(ctx)
        except GinvError as exc:
            return _payload(f"lemma31: {exc}", fld, a=a, delta=delta)
        return None
    return None


def suite_prop27(rng, fld, n) -> Optional[dict]:
    a = rand_square(rng, fld, n)
    a_plus = core.reflexive_ginv(a)
    if rng.random() < 0.5:
        a_plus = core.perturb_reflexive(a, a_plus, rand_square(rng, fld, n))
    for _ in range(RETRIES):
        delta = rand_square(rng, fld, n)
        ident = Matrix.identity(fld, n)
        if invert(ident + a_plus @ delta) is None:
            continue
        report = perturbation.stable_checks(a, a_plus, delta)
        conds = report.all_conditions()
        if len(set(conds)) != 1:
            return _payload(f"prop27: conditions disagree {conds}", fld,
                            a=a, a_plus=a_plus, delta=delta)
        return None
    return None


def _sample_stable_delta(rng, fld, n, a):
    """delta = a m a guarantees the stability hypotheses of the theorem."""
    m = rand_square(rng, fld, n)
    return a @ m @ a


def suite_thm32(rng, fld, n) -> Optional[dict]:
    for _ in range(RETRIES):
        a = rand_group_invertible(rng, fld, n)
        delta = _sample_stable_delta(rng, fld, n, a)
        ident = Matrix.identity(fld, n)
        cert = core.group_inverse(a)
        if invert(ident + cert.inverse @ delta) is None:
            continue
        try:
            perturbation.perturbed_group_inverse(a, delta)
            if not perturbation.conjugation_identity_holds(a, delta):
                return _payload("thm32: conjugation identity failed", fld,
                                a=a, delta=delta)
        except GinvError as exc:
            return _payload(f"thm32: {exc}", fld, a=a, delta=delta)
        return None
    return None


def suite_prop33(rng, fld, n) -> Optional[dict]:
    a = rand_group_invertible(rng, fld, n)
    abar = rand_group_invertible(rng, fld, n)
    report = perturbation.k_equivalence_checks(a, abar)
    conds = report.all_conditions()
    if len(set(conds)) != 1:
        return _payload(f"prop33: conditions disagree {conds}", fld,
                        a=a, abar=abar)
    if report.k_invertible:
        cert = core.group_inverse(a)
        ident = Matrix.identity(fld, n)
        t_inv = invert(ident + cert.inverse @ (abar - a))
        if t_inv is None:
            return _payload("prop33: 1 + a# delta singular despite K "
                            "invertible", fld, a=a, abar=abar)
        cand = t_inv @ cert.inverse
        if not core.is_reflexive_ginv(abar, cand):
            return _payload("prop33: (1 + a# delta)^{-1} a# is not a "
                            "{1,2}-inverse of abar", fld, a=a, abar=abar)
    return None


def suite_thm34(rng, fld, n) -> Optional[dict]:
    a = rand_group_invertible(rng, fld, n)
    abar = rand_group_invertible(rng, fld, n)
    if not perturbation.theorem_phi_implication(a, abar):
        return _payload("thm34: K invertible but phi singular", fld,
                        a=a, abar=abar)
    return None


def all_group_invertible(fld, n):
    """Every group-invertible n x n matrix; only sane for tiny fields."""
    p = fld.p
    cells = n * n
    out = []
    for digits in itertools.product(range(p), repeat=cells):
        m = Matrix(fld, [digits[i * n:(i + 1) * n] for i in range(n)], cols=n)
        if core.is_group_invertible(m):
            out.append(m)
    return out


def exhaustive_thm34(fld, n):
    """Sweep every group-invertible pair; returns (trials, failures)."""
    mats = all_group_invertible(fld, n)
    failures = []
    trials = 0
    for a in mats:
        for abar in mats:
            trials += 1
            if not perturbation.theorem_phi_implication(a, abar):
                failures.append(_payload("thm34 exhaustive: implication failed",
                                         fld, a=a, abar=abar))
    return trials, failures


def suite_cor35(rng, fld, n) -> Optional[dict]:
    for _ in range(RETRIES):
        a = rand_square(rng, fld, n)
        b = rand_square(rng, fld, n)
        da = core.drazin_inverse(a)
        db = core.drazin_inverse(b)
        ident = Matrix.identity(fld, n)
        k_elt = b @ db.inverse + a @ da.inverse - ident
        if invert(k_elt) is None:
            continue
        l = da.index + rng.randrange(2)
        kk = db.index + rng.randrange(2)
        try:
            report = perturbation.drazin_perturbation(a, b, l, kk)
        except GinvError as exc:
            return _payload(f"cor35: {exc}", fld, a=a, b=b)
        if not report.w_phi_agree:
            return _payload("cor35: W disagrees with substituted phi", fld,
                            a=a, b=b)
        return None
    return None


def suite_block(rng, fld, n) -> Optional[dict]:
    if 2 * n > 16:
        raise InputError("block suite needs dim <= 8")
    for _ in range(RETRIES):
        b = rand_group_invertible(rng, fld, n)
        c = rand_group_invertible(rng, fld, n)
        gb = core.group_inverse(b)
        gc = core.group_inverse(c)
        ident = Matrix.identity(fld, n)
        k = gb.inverse @ b + gc.inverse @ c - ident
        if invert(k) is None:
            continue
        try:
            blocks.anti_diagonal_group_inverse(b, c)
        except GinvError as exc:
            return _payload(f"block cor24: {exc}", fld, b=b, c=c)
        # anti-triangular, both branch samplers
        m = rand_square(rng, fld, n)
        for d in (b @ gb.inverse @ m, m @ gc.inverse @ c):
            try:
                blocks.anti_triangular_group_inverse(blocks.BlockSpec(d, b, c))
            except GinvError as exc:
                return _payload(f"block prop41: {exc}", fld, d=d, b=b, c=c)
        # compatible pair for the simplified display
        b2 = rand_group_invertible_with_projector(rng, fld, n)
        c2 = b2  # shared projector makes both compatibility identities hold
        d2 = b2 @ core.group_inverse(b2).inverse @ rand_square(rng, fld, n)
        try:
            blocks.simplified_anti_triangular(blocks.BlockSpec(d2, b2, c2))
        except GinvError as exc:
            return _payload(f"block cor42: {exc}", fld, d=d2, b=b2, c=c2)
        p = rand_idempotent(rng, fld, n) if n > 1 else Matrix.identity(fld, 1)
        for variant in ("pp", "ps"):
            try:
                blocks.star_idempotent_group_inverse(p, variant)
            except GinvError as exc:
                return _payload(f"block cor43 {variant}: {exc}", fld, p=p)
        return None
    return None


def suite_lemma21(rng, fld, n) -> Optional[dict]:
    r = rng.randrange(1, n + 1)
    a = rand_matrix(rng, fld, n, r)
    b = rand_matrix(rng, fld, r, n)
    ident_n = Matrix.identity(fld, n)
    ident_r = Matrix.identity(fld, r)
    inv_ab = invert(ident_n + a @ b)
    inv_ba = invert(ident_r + b @ a)
    if (inv_ab is None) != (inv_ba is None):
        return _payload("lemma21: invertibility equivalence failed", fld,
                        a=a, b=b)
    if inv_ab is None:
        return None
    closed = identities.one_plus_ab_inverse(a, b)
    if closed != inv_ab:
        return _payload("lemma21: closed form disagrees", fld, a=a, b=b)
    prods = identities.intertwining_products(a, b)
    if prods[0] != prods[1] or prods[2] != prods[3]:
        return _payload("lemma21: intertwining identity failed", fld, a=a, b=b)
    left = identities.left_inverse_of_one_plus_ba(a, b, inv_ab)
    if left @ (ident_r + b @ a) != ident_r:
        return _payload("lemma22: constructive left inverse failed", fld,
                        a=a, b=b)
    return None


SUITES: Dict[str, Callable] = {
    "lemma21": suite_lemma21,
    "lemma23": suite_lemma23,
    "lemma25": suite_lemma25,
    "lemma31": suite_lemma31,
    "prop27": suite_prop27,
    "thm32": suite_thm32,
    "prop33": suite_prop33,
    "thm34": suite_thm34,
    "cor35": suite_cor35,
    "block": suite_block,
}


def run_fuzz(fld, dim: int, trials: int, seed: int, suite: str) -> FuzzReport:
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; choose from "
                         f"{sorted(SUITES) + ['all']}")
    if suite == "thm34" and isinstance(fld, PrimeField) and fld.p == 2 and dim == 2:
        n_trials, failures = exhaustive_thm34(fld, dim)
        return FuzzReport(suite, fld, dim, n_trials,
                          n_trials - len(failures), failures, seed)
    fn = SUITES[suite]
    failures = []
    for i in range(trials):
        rng = random.Random(f"{seed}:{suite}:{i}")
        result = fn(rng, fld, dim)
        if result is not None:
            result["trial"] = i
            failures.append(result)
    return FuzzReport(suite, fld, dim, trials, trials - len(failures),
                      failures, seed)


def run_all(fld, dim: int, trials: int, seed: int) -> List[FuzzReport]:
    return [run_fuzz(fld, dim, trials, seed, name) for name in sorted(SUITES)]
