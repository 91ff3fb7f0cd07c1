"""Exact finite group theory for the class-two Jordan reduction of semilinear groups.

The main entry points are re-exported here; see the subpackages for the rest.
"""

__version__ = "0.1.0"

from .errors import (
    CapError,
    CertificationFailure,
    InputError,
    NilpJordanError,
    PreconditionError,
)
from .exact_field import CycloNumber, FieldAutomorphism, RationalFunction, parse_scalar
from .group_core import FiniteGroup, Matrix, Permutation, Semilinear, Subgroup, closure
from .groupfile import format_group, load_group, parse_group_file
from .jordan import ReductionReport, chermak_delgado, semilinear_reduce
from .structure import is_class_at_most_two, nilpotency_class

__all__ = [
    "CapError",
    "CertificationFailure",
    "CycloNumber",
    "FieldAutomorphism",
    "FiniteGroup",
    "InputError",
    "Matrix",
    "NilpJordanError",
    "Permutation",
    "PreconditionError",
    "RationalFunction",
    "ReductionReport",
    "Semilinear",
    "Subgroup",
    "chermak_delgado",
    "closure",
    "format_group",
    "is_class_at_most_two",
    "load_group",
    "nilpotency_class",
    "parse_group_file",
    "parse_scalar",
    "semilinear_reduce",
]
