"""Exact arithmetic in Q(zeta_m) and Q(zeta_m)(t) with Moebius automorphisms."""

from fractions import Fraction as Rational

from .automorphism import (
    FieldAutomorphism,
    apply_automorphism,
    automorphism_order,
    compose_automorphisms,
)
from .expr import parse_scalar
from .polyq import cyclotomic_polynomial, euler_phi
from .scalars import (
    CycloNumber,
    RationalFunction,
    field_add,
    field_div,
    field_inv,
    field_mul,
    field_neg,
    field_pow,
    field_sub,
    lift_conductor,
    make_rational_function,
    root_of_unity_exponent,
    t_variable,
)

FieldScalar = CycloNumber | RationalFunction

__all__ = [
    "Rational",
    "FieldScalar",
    "CycloNumber",
    "RationalFunction",
    "FieldAutomorphism",
    "apply_automorphism",
    "automorphism_order",
    "compose_automorphisms",
    "cyclotomic_polynomial",
    "euler_phi",
    "field_add",
    "field_div",
    "field_inv",
    "field_mul",
    "field_neg",
    "field_pow",
    "field_sub",
    "lift_conductor",
    "make_rational_function",
    "parse_scalar",
    "root_of_unity_exponent",
    "t_variable",
]
