"""Chermak-Delgado subgroup: the least subgroup of maximal |H| * |C_G(H)|."""

from functools import reduce

from ..group_core import (
    abelian_subgroups,
    all_subgroups,
    automorphism_group,
    center,
    centralizer,
    cyclic_subgroups,
    image,
    index,
    intersection,
    is_normal,
    join,
)
from .report import Transcript


def measure(G, H):
    return H.order * centralizer(G, H).order


def chermak_delgado(G, *, lattice_cap=2000, aut_cap=256, transcript=None, lattice=None):
    """The minimal member M of the maximal-measure sublattice.

    M is certified abelian, normal, containing Z(G), characteristic (by full
    automorphism enumeration when |G| <= aut_cap) and |G:M| <= |G:A|^2 for
    every abelian subgroup A.
    """
    log = Transcript() if transcript is None else transcript
    if lattice is None:
        lattice = all_subgroups(G, lattice_cap)
    measures = [measure(G, H) for H in lattice]
    best = max(measures)
    top = [H for H, mu in zip(lattice, measures) if mu == best]
    M = reduce(intersection, top)
    log.note("maximal Chermak-Delgado measure", "full lattice scan", best)
    log.certify(
        "minimal max-measure subgroup lies in the max-measure set",
        "intersection of all max-measure subgroups",
        M in top,
    )
    log.certify("M is abelian", "pairwise commuting check", M.is_abelian())
    log.certify("Z(G) <= M", "containment", center(G) <= M)
    log.certify("M is normal in G", "conjugation by generators", is_normal(G, M))
    if G.order <= aut_cap:
        auts = automorphism_group(G, aut_cap)
        log.certify(
            "M is characteristic",
            f"invariance under all {len(auts)} automorphisms",
            all(image(f, M) == M for f in auts),
        )
    else:
        log.note(
            "M is characteristic",
            f"not enumerated (|G| > {aut_cap}); normality only",
            "unverified",
        )
    abelian = abelian_subgroups(G, lattice=lattice)
    best_abelian = max(A.order for A in abelian)
    ok = all(index(G, M) <= index(G, A) ** 2 for A in abelian)
    log.certify(
        "|G:M| <= |G:A|^2 for every abelian A",
        f"exhaustive over {len(abelian)} abelian subgroups",
        ok,
    )
    log.note("index of M", "|G|/|M|", index(G, M))
    log.note("least abelian index", "lattice scan", G.order // best_abelian)
    return M


def double_centralizer(G, H):
    return centralizer(G, centralizer(G, H))


def chermak_delgado_fast(G):
    """Measure ascent through double centralizers of joins with cyclic subgroups.

    Cheaper than the lattice scan but not guaranteed to find the minimal
    member; callers cross-check against ``chermak_delgado``.
    """
    cyclics = cyclic_subgroups(G)
    H = double_centralizer(G, center(G))
    mu = measure(G, H)
    improved = True
    while improved:
        improved = False
        for C in cyclics:
            K = double_centralizer(G, join(H, C))
            nu = measure(G, K)
            if nu > mu:
                H, mu = K, nu
                improved = True
    # H is a local maximum; H and C(H) share the measure and H n C(H) = Z(H)
    M = intersection(H, centralizer(G, H))
    if measure(G, M) != mu:
        M = H
    return M


def cross_check_fast_path(G, M, transcript=None):
    fast = chermak_delgado_fast(G)
    agree = fast == M
    if transcript is not None:
        transcript.note("double-centralizer fast path agrees", "comparison", agree)
    return agree


__all__ = [
    "chermak_delgado",
    "chermak_delgado_fast",
    "cross_check_fast_path",
    "double_centralizer",
    "measure",
]
