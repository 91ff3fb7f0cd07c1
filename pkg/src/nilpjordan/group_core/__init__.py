"""Finite groups by exhaustive enumeration."""

from .elements import (
    Matrix,
    Permutation,
    Semilinear,
    as_semilinear,
    determinant,
    element_order,
    permutation_matrix,
)
from .finite_group import (
    DEFAULT_CLOSURE_CAPS,
    FiniteGroup,
    GroupHom,
    Subgroup,
    as_group,
    center,
    centralizer,
    closure,
    commutator,
    commutator_subgroup,
    from_table,
    hom_from_generators,
    image,
    index,
    intersection,
    is_normal,
    join,
    kernel,
    lift_subgroup,
    preimage,
    quotient,
    restrict_subgroup,
    subgroup_from_elements,
    subgroup_generated,
    trivial_subgroup,
    whole_group,
)
from .lattice import (
    abelian_subgroups,
    all_subgroups,
    automorphism_group,
    cyclic_subgroups,
    min_generating_set,
    min_generators,
)

__all__ = [
    "DEFAULT_CLOSURE_CAPS",
    "FiniteGroup",
    "GroupHom",
    "Matrix",
    "Permutation",
    "Semilinear",
    "Subgroup",
    "abelian_subgroups",
    "all_subgroups",
    "as_group",
    "as_semilinear",
    "automorphism_group",
    "center",
    "centralizer",
    "closure",
    "commutator",
    "commutator_subgroup",
    "cyclic_subgroups",
    "determinant",
    "element_order",
    "from_table",
    "hom_from_generators",
    "image",
    "index",
    "intersection",
    "is_normal",
    "join",
    "kernel",
    "lift_subgroup",
    "min_generating_set",
    "min_generators",
    "permutation_matrix",
    "preimage",
    "quotient",
    "restrict_subgroup",
    "subgroup_from_elements",
    "subgroup_generated",
    "trivial_subgroup",
    "whole_group",
]
