"""Exact-arithmetic toolkit for graded Lie algebras, their algebras of
quotients, and the associated Jordan systems."""

from .scalars import QQ, GF, Field
from .lie import GradedLieAlgebra, GradingGroup, direct_sum
from .linalg import Subspace, span, kernel_basis
from .analysis import (
    killing_determinant,
    is_semiprime,
    is_prime,
    is_strongly_nondegenerate,
    is_essential_ideal,
    socle,
    graded_socle,
    graded_core,
    structure_report,
)
from .derivations import (
    QuotientEmbedding,
    Verdict,
    derivation_space,
    graded_derivation_components,
    denominator_ideal,
    is_quotient,
    is_weak_quotient,
    maximal_quotients,
    maximal_quotients_match,
    check_axiomatic,
)
from .assoc import (
    AssocAlgebra,
    exchange_double,
    exchange_skew_iso,
    central_quotient,
    check_central_quotients,
)
from .jordan import (
    JordanPair,
    JordanTriple,
    JordanAlgebra,
    SubPair,
    PairEmbedding,
    pair_annihilator,
    pair_is_semiprime,
    pair_is_strongly_nondegenerate,
    inner_derivations,
    tkk,
    tkk_ideal,
    associated_pair,
    is_pair_of_quotients,
    tkk_embedding,
    maximal_pair_quotients,
    maximal_triple_quotients,
    maximal_jordan_algebra_quotients,
)
from .serialize import AlgebraFile, parse_algebra, serialize_algebra

__version__ = "0.1.0"

__all__ = [
    "QQ", "GF", "Field",
    "GradedLieAlgebra", "GradingGroup", "direct_sum",
    "Subspace", "span", "kernel_basis",
    "killing_determinant", "is_semiprime", "is_prime",
    "is_strongly_nondegenerate", "is_essential_ideal",
    "socle", "graded_socle", "graded_core", "structure_report",
    "QuotientEmbedding", "Verdict", "derivation_space",
    "graded_derivation_components", "denominator_ideal",
    "is_quotient", "is_weak_quotient",
    "maximal_quotients", "maximal_quotients_match", "check_axiomatic",
    "AssocAlgebra", "exchange_double", "exchange_skew_iso",
    "central_quotient", "check_central_quotients",
    "JordanPair", "JordanTriple", "JordanAlgebra", "SubPair",
    "PairEmbedding", "pair_annihilator", "pair_is_semiprime",
    "pair_is_strongly_nondegenerate", "inner_derivations",
    "tkk", "tkk_ideal", "associated_pair", "is_pair_of_quotients",
    "tkk_embedding", "maximal_pair_quotients", "maximal_triple_quotients",
    "maximal_jordan_algebra_quotients",
    "AlgebraFile", "parse_algebra", "serialize_algebra",
]
