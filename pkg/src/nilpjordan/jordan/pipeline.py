"""Reduction of a finite semilinear group to a class-two subgroup of known index.

Steps: the linear part N = G n GL; its Chermak-Delgado subgroup A (normal
in G); the common eigenspaces of A, permuted by G; the kernel G_1 of that
permutation action, in which A is central; and finally the abelian
reduction of G_1/A over (N n G_1)/A, pulled back to G.
"""

from math import factorial

import numpy as np

from ..errors import (
    CertificationFailure,
    ExponentNotDividingConductor,
    GammaNotAbelian,
    PreconditionError,
)
from ..group_core import (
    FiniteGroup,
    GroupHom,
    Permutation,
    Subgroup,
    as_group,
    as_semilinear,
    closure,
    commutator_subgroup,
    image,
    index,
    intersection,
    is_normal,
    kernel,
    lift_subgroup,
    permutation_matrix,
    preimage,
    quotient,
    restrict_subgroup,
    whole_group,
)
from ..structure import is_class_at_most_two, nilpotency_class
from .chermak_delgado import chermak_delgado
from .eigen import common_eigenspaces, summand_image, verify_decomposition
from .lemmas import bounded_reduction
from .report import ChainStep, ReductionReport, Transcript


def as_semilinear_group(G):
    """View G as a group of semilinear pairs.

    Matrix groups get trivial Galois parts; permutation groups become
    permutation matrices over Q(zeta_e), e the exponent of G, so that every
    eigenvalue is available.  Element order is preserved.
    """
    if G.kind == "semilinear":
        return G
    if G.kind == "matrix":
        elements = [as_semilinear(g) for g in G.elements]
        m = G.conductor
    elif G.kind == "permutation":
        m = G.exponent
        elements = [as_semilinear(permutation_matrix(g, m)) for g in G.elements]
    else:
        raise PreconditionError("the reduction needs a concrete group")
    gens = [elements[i] for i in G.gens] or [elements[0]]
    H = closure(gens, name=G.name)
    # closure reorders elements; relabel so indices match G
    pos = np.array([H.index_of(g) for g in elements], dtype=np.intp)
    inv = np.empty_like(pos)
    inv[pos] = np.arange(len(pos))
    return FiniteGroup(
        G.order,
        G.gens,
        kind="semilinear",
        elements=elements,
        table=inv[H.table[np.ix_(pos, pos)]],
        name=G.name,
        conductor=m,
        dimension=H.dimension,
    )


def galois_parts_commute(G):
    gens = [G.element(i).aut for i in G.gens]
    return all(a * b == b * a for a in gens for b in gens)


def _summand_permutation(g, D, lookup):
    m = D.conductor
    images = []
    for s in D.summands:
        img = summand_image(g, s, m)
        j = lookup.get(img)
        if j is None:
            return None
        images.append(j)
    return tuple(images)


def semilinear_reduce(G, *, lattice_cap=2000, aut_cap=256):
    """Run the reduction on a finite semilinear (or matrix/permutation) group.

    Every claim in the returned report was checked on the data; a failed
    check raises CertificationFailure.
    """
    input_kind = G.kind
    S = as_semilinear_group(G)
    log = Transcript()
    info = {
        "kind": input_kind,
        "order": G.order,
        "conductor": S.conductor,
        "n": S.dimension,
    }
    if G.name:
        info["name"] = G.name
    if input_kind == "permutation":
        log.note("permutation input", "permutation matrices over Q(zeta_e)", S.conductor)

    if not galois_parts_commute(S):
        raise GammaNotAbelian("the Galois parts of the generators do not commute")
    gamma = {S.element(i).aut for i in range(S.order)}
    log.certify("Gamma is abelian", "generator Galois parts commute pairwise", True)
    log.note("|Gamma|", "distinct Galois parts", len(gamma))

    full = whole_group(S)
    if S.order == 1:
        return ReductionReport(
            input=info,
            chain=[ChainStep("G", 1, 1, full)],
            final={"order": 1, "index": 1, "class": 0},
            constants={"R": 1, "m": 0, "r": 1},
            eigenspaces={"dimensions": [S.dimension], "characters": [[0]]},
            transcript=log,
            subgroup=full,
        )

    linear = np.array([S.element(i).aut.is_identity() for i in range(S.order)])
    N = Subgroup(S, linear)
    log.certify("N = G n GL is a normal subgroup", "conjugation by generators", is_normal(S, N))
    log.certify("|G:N| = |Gamma|", "counting", index(S, N) == len(gamma))
    exp_N = int(np.lcm.reduce(S.element_orders[N.array]))
    if S.conductor % exp_N:
        raise ExponentNotDividingConductor(
            f"exponent {exp_N} of G n GL does not divide conductor {S.conductor}"
        )
    log.certify("exponent of N divides the conductor", "element orders", True)

    Ng = as_group(N, name="N")
    M = chermak_delgado(Ng, lattice_cap=lattice_cap, aut_cap=aut_cap, transcript=log)
    A = lift_subgroup(Ng, M, S)
    log.certify("A is normal in G", "conjugation by generators", is_normal(S, A))

    D = common_eigenspaces(S, A)
    total, scalar, distinct = verify_decomposition(S, D)
    log.certify("eigenspace dimensions sum to n", "sum", total)
    log.certify("A acts on each summand by its character", "basis vectors", scalar)
    log.certify("summand characters are distinct", "comparison", distinct)
    r = len(D.summands)

    lookup = {s.basis: j for j, s in enumerate(D.summands)}
    perms = []
    for i in range(S.order):
        p = _summand_permutation(S.element(i), D, lookup)
        if p is None:
            raise CertificationFailure(f"element {i} does not permute the eigenspaces")
        perms.append(p)
    log.certify("G permutes the eigenspaces", "exact echelon comparison for every element", True)
    Sym = closure([Permutation(p) for p in perms] + [Permutation(range(r))])
    action = GroupHom(S, Sym, [Sym.index_of(Permutation(p)) for p in perms])
    log.certify("the permutation action is a homomorphism", "full table check", True)
    G1 = kernel(action)
    log.certify(
        f"|G:G_1| = {index(S, G1)} <= r! = {factorial(r)}",
        "index comparison",
        index(S, G1) <= factorial(r),
    )

    log.certify(
        "A <= Z(G_1)",
        "A commutes with every element of G_1",
        bool(S.commuting[np.ix_(A.array, G1.array)].all()),
    )

    G1g = as_group(G1, name="G_1")
    A1 = restrict_subgroup(G1g, A)
    N1 = restrict_subgroup(G1g, intersection(N, G1))
    Q, proj = quotient(G1g, A1)
    Nbar = image(proj, N1)
    log.certify(
        "G_1/A over (N n G_1)/A has abelian quotient",
        "[Q, Q] <= Nbar",
        commutator_subgroup(Q) <= Nbar,
    )
    red = bounded_reduction(Q, Nbar, aut_cap=aut_cap, transcript=log)
    C = lift_subgroup(G1g, preimage(proj, red.centralizer), S)
    H = lift_subgroup(G1g, preimage(proj, red.abelian), S)
    if S is not G:
        # same indexing; hand back subgroups of the caller's group
        G1, C, H, full = (Subgroup(G, K.mask) for K in (G1, C, H, full))

    Hg = as_group(H, name="H")
    cls = nilpotency_class(Hg)
    log.certify(
        f"H has nilpotency class {cls} <= 2",
        "independent upper/lower central series",
        cls is not None and cls <= 2,
    )
    log.certify("H' <= Z(H)", "class-two criterion", is_class_at_most_two(Hg))
    log.certify("A <= H", "containment", A <= H)

    chain = [
        ChainStep("G", S.order, 1, full),
        ChainStep("G_1 (kernel of the eigenspace permutation action)", G1.order, index(S, G1), G1),
        ChainStep("C (preimage of the centralizer of N/A)", C.order, G1.order // C.order, C),
        ChainStep("H (preimage of the commutator-kernel subgroup)", H.order, C.order // H.order, H),
    ]
    product = 1
    for step in chain:
        product *= step.index
    log.certify("chain indices multiply to |G:H|", "product", product == S.order // H.order)

    return ReductionReport(
        input=info,
        chain=chain,
        final={"order": H.order, "index": S.order // H.order, "class": cls},
        constants={"R": Nbar.order, "m": len(red.generators), "r": r},
        eigenspaces={"dimensions": D.dimensions, "characters": D.characters()},
        transcript=log,
        subgroup=H,
        decomposition=D,
    )
