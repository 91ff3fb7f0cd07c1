"""Bounded-index subgroup constructions and the semilinear reduction."""

from .chermak_delgado import (
    chermak_delgado,
    chermak_delgado_fast,
    cross_check_fast_path,
    double_centralizer,
    measure,
)
from .eigen import EigenDecomposition, Summand, common_eigenspaces, verify_decomposition
from .lemmas import (
    abelian_by_bounded_reduce,
    best_abelian_index,
    bounded_reduction,
    cent_construction,
    commutator_kernel_abelian,
)
from .pipeline import as_semilinear_group, semilinear_reduce
from .report import ChainStep, Claim, ReductionReport, Transcript

__all__ = [
    "ChainStep",
    "Claim",
    "EigenDecomposition",
    "ReductionReport",
    "Summand",
    "Transcript",
    "abelian_by_bounded_reduce",
    "as_semilinear_group",
    "best_abelian_index",
    "bounded_reduction",
    "cent_construction",
    "chermak_delgado",
    "chermak_delgado_fast",
    "common_eigenspaces",
    "commutator_kernel_abelian",
    "cross_check_fast_path",
    "double_centralizer",
    "measure",
    "semilinear_reduce",
    "verify_decomposition",
]
