"""Bounded-index constructions inside extensions with abelian quotient.

Centralizing a normal subgroup N with G/N abelian gives a subgroup of class
at most two; in class two the common kernel of the commutator maps
x -> [x, g_i] over a generating set is abelian of index at most |G'|^m.
"""

from dataclasses import dataclass
from math import factorial

from ..errors import NotClassTwo, NotGenerating, NotNormal, QuotientNotAbelian
from ..group_core import (
    abelian_subgroups,
    all_subgroups,
    as_group,
    automorphism_group,
    centralizer,
    index,
    intersection,
    is_normal,
    kernel,
    lift_subgroup,
    min_generating_set,
    subgroup_generated,
    whole_group,
)
from ..structure import commutator_map, derived_subgroup, is_class_at_most_two
from .report import Transcript


def automorphism_count_bound(N, aut_cap=256):
    """(|Aut(N)| or |N|!, method) for a subgroup N."""
    if N.order <= aut_cap:
        return len(automorphism_group(as_group(N), aut_cap)), "enumerated |Aut(N)|"
    return factorial(N.order), "|N|! (Aut(N) not enumerated)"


def cent_construction(G, N, *, aut_cap=256, transcript=None):
    """G_1 = C_G(N) for N normal with G/N abelian.

    Certifies |G : G_1| <= |Aut(N)| <= |N|! and that G_1 has class <= 2.
    """
    log = Transcript() if transcript is None else transcript
    if not is_normal(G, N):
        raise NotNormal("N is not normal in G")
    if not derived_subgroup(G) <= N:
        raise QuotientNotAbelian("G/N is not abelian")
    G1 = centralizer(G, N)
    bound, method = automorphism_count_bound(N, aut_cap)
    idx = index(G, G1)
    log.certify(f"|G:C_G(N)| = {idx} <= {bound}", method, idx <= bound)
    log.note("coarse bound |N|!", "factorial", factorial(N.order))
    # C_G(N) n N is central in C_G(N) and the quotient embeds in G/N
    log.certify(
        "C_G(N) has class <= 2",
        "G_1' <= Z(G_1) on the restricted table",
        is_class_at_most_two(as_group(G1)),
    )
    return G1


def commutator_kernel_abelian(G, gens, *, transcript=None):
    """A = intersection of ker(x -> [x, g]) over the given generators of G."""
    log = Transcript() if transcript is None else transcript
    gens = [G.check_index(g) for g in gens]
    if not is_class_at_most_two(G):
        raise NotClassTwo("G is not nilpotent of class at most two")
    if subgroup_generated(G, gens).order != G.order:
        raise NotGenerating("the given elements do not generate G")
    A = whole_group(G)
    for g in gens:
        A = intersection(A, kernel(commutator_map(G, g)))
    D = derived_subgroup(G)
    bound = D.order ** len(gens)
    log.certify("kernel intersection is abelian", "pairwise commuting check", A.is_abelian())
    log.certify(
        f"|G:A| = {index(G, A)} <= |G'|^m = {D.order}^{len(gens)}",
        "index comparison",
        index(G, A) <= bound,
    )
    return A


@dataclass
class BoundedReduction:
    centralizer: object
    abelian: object
    generators: tuple
    aut_bound: int
    bound: int


def bounded_reduction(G, N, *, aut_cap=256, transcript=None):
    """Both stages: G_1 = C_G(N), then the commutator-kernel subgroup of G_1
    for a minimal generating set of G_1."""
    log = Transcript() if transcript is None else transcript
    G1 = cent_construction(G, N, aut_cap=aut_cap, transcript=log)
    G1g = as_group(G1)
    gens = min_generating_set(G1g)
    log.note("minimal generating set of C_G(N)", "level search over subgroups", len(gens))
    A1 = commutator_kernel_abelian(G1g, gens, transcript=log)
    A = lift_subgroup(G1g, A1, G)
    aut_bound, _ = automorphism_count_bound(N, aut_cap)
    bound = aut_bound * N.order ** len(gens)
    log.certify("result is abelian", "pairwise commuting check", A.is_abelian())
    log.certify(
        f"|G:A| = {index(G, A)} <= |Aut(N)| * |N|^m = {bound}",
        "index comparison",
        index(G, A) <= bound,
    )
    return BoundedReduction(G1, A, tuple(int(g) for g in G1g.embedding[list(gens)]), aut_bound, bound)


def abelian_by_bounded_reduce(G, N, *, aut_cap=256, transcript=None):
    """An abelian subgroup of G of index <= |Aut(N)| * |N|^m."""
    return bounded_reduction(G, N, aut_cap=aut_cap, transcript=transcript).abelian


def best_abelian_index(G, lattice_cap=2000, lattice=None):
    """min |G:A| over abelian subgroups A (exhaustive)."""
    if lattice is None:
        lattice = all_subgroups(G, lattice_cap)
    return G.order // max(A.order for A in abelian_subgroups(G, lattice=lattice))


__all__ = [
    "BoundedReduction",
    "abelian_by_bounded_reduce",
    "automorphism_count_bound",
    "best_abelian_index",
    "bounded_reduction",
    "cent_construction",
    "commutator_kernel_abelian",
]
