"""Command line entry point: JSON in, JSON out, strict exit codes.

Exit codes: 0 success, 1 hypothesis not met (formula inapplicable, details in
the JSON), 2 input error, 3 internal invariant violation (an identity that
should always hold failed; the output carries a replayable counterexample).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import blocks, core, perturbation
from .errors import (DimensionError, GinvError, HypothesisNotMet, InputError,
                     InvariantViolation, PreconditionError)
from .fields import PrimeField, Rationals
from .fuzz import SUITES, run_all, run_fuzz
from .iojson import (dumps_canonical, field_to_json, matrix_to_json,
                     parse_input)
from .matrix import Matrix, invert

EXIT_OK = 0
EXIT_HYPOTHESIS = 1
EXIT_INPUT = 2
EXIT_INVARIANT = 3


def _jsonable(value):
    if isinstance(value, Matrix):
        return matrix_to_json(value)
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return repr(value)


def _emit(obj) -> int:
    sys.stdout.write(dumps_canonical(obj))
    return EXIT_OK


def _load(path: str):
    try:
        with open(path, "rb") as fh:
            return parse_input(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _get(doc, name: str) -> Matrix:
    if name not in doc.matrices:
        raise InputError(f"no matrix named {name!r} in the input document")
    return doc.matrices[name]


def _cert_json(cert: core.GroupInverseCertificate, oracle_agreement=True):
    return {"inverse": matrix_to_json(cert.inverse), "index": cert.index,
            "oracle_agreement": oracle_agreement}


# ---------------------------------------------------------------------------
# subcommands


def cmd_ginv(args) -> int:
    doc = _load(args.file)
    a = _get(doc, args.name)
    if not a.is_square():
        raise InputError(f"matrix {args.name!r} must be square")
    if args.kind == "one":
        b = core.one_inverse(a)
        return _emit({"kind": "one", "result": matrix_to_json(b),
                      "axioms": {"aba=a": a @ b @ a == a}})
    if args.kind == "reflexive":
        b = core.reflexive_ginv(a)
        return _emit({"kind": "reflexive", "result": matrix_to_json(b),
                      "axioms": {"aba=a": a @ b @ a == a,
                                 "bab=b": b @ a @ b == b}})
    if args.kind == "group":
        cert = core.group_inverse(a)
        if cert is None:
            raise HypothesisNotMet("a is not group invertible "
                                   "(rank(a) != rank(a^2))")
        return _emit({"kind": "group", "result": matrix_to_json(cert.inverse),
                      "index": cert.index, "oracle_agreement": True})
    cert = core.drazin_inverse(a)
    return _emit({"kind": "drazin", "result": matrix_to_json(cert.inverse),
                  "index": cert.index, "oracle_agreement": True})


def cmd_lemma23(args) -> int:
    doc = _load(args.file)
    a = _get(doc, args.a)
    a_plus = _get(doc, args.aplus)
    cert = core.group_from_reflexive(a, a_plus)
    return _emit({"group_inverse": matrix_to_json(cert.inverse),
                  "index": cert.index,
                  "hypotheses": {"s_invertible": True,
                                 "aplus_reflexive": True},
                  "oracle_agreement": True})


def cmd_check_stable(args) -> int:
    doc = _load(args.file)
    a = _get(doc, args.a)
    delta = _get(doc, args.da)
    a_gen = _get(doc, args.aplus) if args.aplus else core.reflexive_ginv(a)
    report = perturbation.stable_checks(a, a_gen, delta)
    out = {f"cond{i}": v for i, v in enumerate(report.all_conditions(), 1)}
    return _emit({"conditions": out,
                  "abar_plus": (matrix_to_json(report.abar_plus)
                                if report.abar_plus is not None else None)})


def cmd_perturb(args) -> int:
    doc = _load(args.file)
    a = _get(doc, args.a)
    delta = _get(doc, args.da)
    cert = perturbation.perturbed_group_inverse(a, delta)
    return _emit({"result": matrix_to_json(cert.inverse), "index": cert.index,
                  "hypotheses": {"group_inverse": True,
                                 "one_plus_sharp_delta_invertible": True,
                                 "phi_invertible": True, "stable": True},
                  "oracle_agreement": True})


def cmd_k_check(args) -> int:
    doc = _load(args.file)
    a = _get(doc, args.a)
    abar = _get(doc, args.abar)
    report = perturbation.k_equivalence_checks(a, abar)
    implication = perturbation.theorem_phi_implication(a, abar)
    return _emit({"splittings_hold": report.splittings_hold,
                  "k_invertible": report.k_invertible,
                  "intersections_hold": report.intersections_hold,
                  "k_inverse": (matrix_to_json(report.k_inverse)
                                if report.k_inverse is not None else None),
                  "phi_implication": implication})


def cmd_drazin_perturb(args) -> int:
    doc = _load(args.file)
    a = _get(doc, args.a)
    b = _get(doc, args.b)
    ind_a = core.index_of(a)
    ind_b = core.index_of(b)
    l = args.l if args.l is not None else ind_a
    k = args.k if args.k is not None else ind_b
    report = perturbation.drazin_perturbation(a, b, l, k)
    return _emit({"result": matrix_to_json(report.certificate.inverse),
                  "index": report.certificate.index, "l": l, "k": k,
                  "claims": {"one_plus_invertible": report.one_plus_invertible,
                             "range_condition": report.range_condition,
                             "w_invertible": report.w_invertible,
                             "w_phi_agree": report.w_phi_agree},
                  "oracle_agreement": True})


def _block_json(result: blocks.BlockGroupInverse, hypotheses) -> dict:
    (a11, a12), (a21, a22) = result.blocks
    return {"blocks": {"a11": matrix_to_json(a11), "a12": matrix_to_json(a12),
                       "a21": matrix_to_json(a21), "a22": matrix_to_json(a22)},
            "assembled": matrix_to_json(result.assembled),
            "index": result.certificate.index,
            "hypotheses": hypotheses, "oracle_agreement": True}


def cmd_block(args) -> int:
    doc = _load(args.file)
    if args.star:
        p = _get(doc, args.p if args.p else "p")
        result = blocks.star_idempotent_group_inverse(p, args.star)
        return _emit(_block_json(result, {"idempotent": True, "nonzero": True}))
    b = _get(doc, args.b)
    c = _get(doc, args.c)
    hypotheses = {"b_group_invertible": True, "c_group_invertible": True,
                  "k_invertible": True}
    if args.anti_diagonal:
        result = blocks.anti_diagonal_group_inverse(b, c)
        return _emit(_block_json(result, hypotheses))
    if not args.d:
        raise InputError("--d is required unless --anti-diagonal or --star")
    spec = blocks.BlockSpec(_get(doc, args.d), b, c)
    if args.simplified:
        result = blocks.simplified_anti_triangular(spec)
        hypotheses["compatibility"] = True
    else:
        result = blocks.anti_triangular_group_inverse(spec)
    hypotheses["branch"] = True
    return _emit(_block_json(result, hypotheses))


def _parse_fuzz_field(text: str):
    if text == "Q":
        return Rationals()
    if text.startswith("GF:"):
        try:
            return PrimeField(int(text[3:]))
        except ValueError as exc:
            raise InputError(f"bad field {text!r}") from exc
    raise InputError(f"bad field {text!r}; use Q or GF:p")


def cmd_fuzz(args) -> int:
    fld = _parse_fuzz_field(args.field)
    seed = args.seed
    env_seed = os.environ.get("GINV_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError as exc:
            raise InputError("GINV_SEED must be an integer") from exc
    if args.suite == "all":
        reports = run_all(fld, args.dim, args.trials, seed)
        total_failures = sum(len(r.failures) for r in reports)
        code = _emit({"suites": [r.to_json() for r in reports]})
        return EXIT_INVARIANT if total_failures else code
    report = run_fuzz(fld, args.dim, args.trials, seed, args.suite)
    code = _emit(report.to_json())
    return EXIT_INVARIANT if report.failures else code


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ginv",
        description="Exact group/Drazin inverse computations and "
                    "perturbation identity checks over Q and GF(p).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ginv", help="compute a generalized inverse")
    p.add_argument("file")
    p.add_argument("--name", required=True)
    p.add_argument("--kind", required=True,
                   choices=["one", "reflexive", "group", "drazin"])
    p.set_defaults(fn=cmd_ginv)

    p = sub.add_parser("lemma23", help="group inverse from a {1,2}-inverse")
    p.add_argument("file")
    p.add_argument("--a", required=True)
    p.add_argument("--aplus", required=True)
    p.set_defaults(fn=cmd_lemma23)

    p = sub.add_parser("check-stable", help="the six stability conditions")
    p.add_argument("file")
    p.add_argument("--a", required=True)
    p.add_argument("--da", required=True)
    p.add_argument("--aplus", default=None,
                   help="{1,2}-inverse to use (default: canonical)")
    p.set_defaults(fn=cmd_check_stable)

    p = sub.add_parser("perturb", help="perturbed group inverse closed form")
    p.add_argument("file")
    p.add_argument("--a", required=True)
    p.add_argument("--da", required=True)
    p.set_defaults(fn=cmd_perturb)

    p = sub.add_parser("k-check", help="K(a, abar) equivalences and the "
                                       "phi implication")
    p.add_argument("file")
    p.add_argument("--a", required=True)
    p.add_argument("--abar", required=True)
    p.set_defaults(fn=cmd_k_check)

    p = sub.add_parser("drazin-perturb", help="Drazin perturbation closed form")
    p.add_argument("file")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(fn=cmd_drazin_perturb)

    p = sub.add_parser("block", help="block closed forms")
    p.add_argument("file")
    p.add_argument("--d", default=None)
    p.add_argument("--b", default=None)
    p.add_argument("--c", default=None)
    p.add_argument("--p", default=None, help="idempotent for --star variants")
    p.add_argument("--anti-diagonal", action="store_true",
                   dest="anti_diagonal")
    p.add_argument("--simplified", action="store_true")
    p.add_argument("--star", choices=["pp", "ps"], default=None)
    p.set_defaults(fn=cmd_block)

    p = sub.add_parser("fuzz", help="run a seeded identity suite")
    p.add_argument("--suite", required=True,
                   choices=sorted(SUITES) + ["all"])
    p.add_argument("--field", default="GF:5")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_fuzz)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "block" and not args.star and (not args.b or not args.c):
        print("error: --b and --c are required unless --star", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.fn(args)
    except HypothesisNotMet as exc:
        sys.stdout.write(dumps_canonical(
            {"error": str(exc), "kind": "hypothesis-not-met",
             "details": {k: _jsonable(v) for k, v in exc.details.items()}}))
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (InputError, PreconditionError, DimensionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        sys.stdout.write(dumps_canonical(
            {"error": str(exc), "kind": "invariant-violation",
             "counterexample": {k: _jsonable(v)
                                for k, v in exc.payload.items()}}))
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except GinvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
