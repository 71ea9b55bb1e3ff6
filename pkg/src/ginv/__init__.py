"""Exact group and Drazin inverses over Q and GF(p), with the closed-form
perturbation and block identities verified against a brute-force oracle."""

from .blocks import (BlockGroupInverse, BlockSpec, anti_diagonal_group_inverse,
                     anti_triangular_group_inverse,
                     simplified_anti_triangular, star_idempotent_group_inverse)
from .core import (GroupInverseCertificate, drazin_inverse,
                   group_from_reflexive, group_inverse, index_of, one_inverse,
                   reflexive_ginv, split_group_inverse,
                   split_group_inverse_converse)
from .errors import (DimensionError, GinvError, HypothesisNotMet, InputError,
                     InvariantViolation, PreconditionError)
from .fields import PrimeField, Rationals
from .identities import (intertwining_products, left_inverse_of_one_plus_ba,
                         one_plus_ab_inverse)
from .matrix import (Matrix, RankFactorization, full_rank_factorization,
                     invert, matrix_power, rank, row_reduce)
from .perturbation import (DrazinPerturbationReport, DualPerturbationContext,
                           KEquivalenceReport, PerturbationContext,
                           StableCheckReport, ba_group_inverse, build_context,
                           drazin_perturbation, dual_context,
                           k_equivalence_checks, perturbed_group_inverse,
                           stable_checks, theorem_phi_implication)

__all__ = [
    "BlockGroupInverse", "BlockSpec", "DimensionError",
    "DrazinPerturbationReport", "DualPerturbationContext", "GinvError",
    "GroupInverseCertificate", "HypothesisNotMet", "InputError",
    "InvariantViolation", "KEquivalenceReport", "Matrix",
    "PerturbationContext", "PreconditionError", "PrimeField",
    "RankFactorization", "Rationals", "StableCheckReport",
    "anti_diagonal_group_inverse", "anti_triangular_group_inverse",
    "ba_group_inverse", "build_context", "drazin_inverse",
    "drazin_perturbation", "dual_context", "full_rank_factorization",
    "group_from_reflexive", "group_inverse", "index_of",
    "intertwining_products", "invert", "k_equivalence_checks",
    "left_inverse_of_one_plus_ba", "matrix_power", "one_inverse",
    "one_plus_ab_inverse", "perturbed_group_inverse", "rank",
    "reflexive_ginv", "row_reduce", "simplified_anti_triangular",
    "split_group_inverse", "split_group_inverse_converse", "stable_checks",
    "star_idempotent_group_inverse", "theorem_phi_implication",
]

__version__ = "0.1.0"
