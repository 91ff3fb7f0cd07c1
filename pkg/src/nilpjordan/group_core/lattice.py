"""Exhaustive subgroup lattice, automorphism group and generator counts."""

import numpy as np

from ..errors import OrderCapExceeded
from .finite_group import GroupHom, Subgroup, _close_mask, _extend_on_tree, spanning_tree


def _key(mask):
    return np.packbits(mask).tobytes()


def cyclic_subgroups(G):
    """Distinct cyclic subgroups, each with its least-index generator."""
    seen = {}
    for g in range(G.order):
        mask = _close_mask(G.table, [g])
        k = _key(mask)
        if k not in seen:
            seen[k] = Subgroup(G, mask, gens=[g] if g else [])
    return list(seen.values())


def maximal_cyclic_generators(G):
    cyclics = cyclic_subgroups(G)
    reps = []
    for C in cyclics:
        if not any(C.order < D.order and C <= D for D in cyclics):
            reps.append(C.gens[0] if C.gens else 0)
    return reps


def all_subgroups(G, order_cap=2000):
    """Every subgroup of G, sorted by order then by index tuple.

    Seeds with the cyclic subgroups and closes under joins with them, which
    reaches every subgroup since each is the join of its cyclic subgroups.
    """
    if G.order > order_cap:
        raise OrderCapExceeded(f"|G| = {G.order} exceeds lattice cap {order_cap}")
    cyclics = cyclic_subgroups(G)
    found = {_key(C.mask): C for C in cyclics}
    queue = list(found.values())
    table = G.table
    while queue:
        H = queue.pop()
        for C in cyclics:
            if not C.gens or H.mask[C.gens[0]]:
                continue
            gens = H.gens + C.gens
            mask = _close_mask(table, gens, start=H.mask)
            k = _key(mask)
            if k not in found:
                K = Subgroup(G, mask, gens=gens)
                found[k] = K
                queue.append(K)
    return sorted(found.values(), key=lambda H: (H.order, H.elements))


def abelian_subgroups(G, order_cap=2000, lattice=None):
    lattice = all_subgroups(G, order_cap) if lattice is None else lattice
    return [H for H in lattice if H.is_abelian()]


def min_generating_set(G):
    """A generating set of least possible size (empty for the trivial group).

    Level k holds the subgroups generated by k elements; generators can be
    drawn from maximal cyclic subgroups without loss.
    """
    if G.order == 1:
        return ()
    table = G.table
    reps = maximal_cyclic_generators(G)
    start = np.zeros(G.order, dtype=bool)
    start[0] = True
    level = [(start, ())]
    seen = {_key(start)}
    while level:
        nxt = []
        for mask, gens in level:
            for g in reps:
                if mask[g]:
                    continue
                new_gens = gens + (g,)
                m2 = _close_mask(table, new_gens, start=mask)
                if m2.all():
                    return new_gens
                k = _key(m2)
                if k not in seen:
                    seen.add(k)
                    nxt.append((m2, new_gens))
        level = nxt
    raise AssertionError("generating set search exhausted without reaching G")


def min_generators(G):
    return len(min_generating_set(G))


def automorphism_group(G, order_cap=256):
    """All automorphisms of G as GroupHom objects (identity first).

    Generator images are restricted to elements with the same order and
    centralizer size, then pruned by the orders of pairwise products, and
    every surviving assignment is checked against the relation
    f(x s) = f(x) f(s) for all x and generators s.
    """
    if G.order > order_cap:
        raise OrderCapExceeded(f"|G| = {G.order} exceeds automorphism cap {order_cap}")
    if G.order == 1:
        return [GroupHom(G, G, [0])]
    table = G.table
    gens = list(min_generating_set(G))
    orders = G.element_orders
    csize = G.commuting.sum(axis=1)
    profile = list(zip(orders.tolist(), csize.tolist()))
    candidates = [[x for x in range(G.order) if profile[x] == profile[g]] for g in gens]
    pair_orders = {
        (i, j): int(orders[table[gens[i], gens[j]]])
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    }
    tree = spanning_tree(table, gens)
    gens_arr = np.array(gens, dtype=np.intp)
    result = []

    def check(images):
        mapping = _extend_on_tree(tree, table, images)
        if len(np.unique(mapping)) != G.order:
            return
        img = np.array(images, dtype=np.intp)
        lhs = mapping[table[:, gens_arr]]
        rhs = table[mapping[:, None], img[None, :]]
        if np.array_equal(lhs, rhs):
            result.append(GroupHom(G, G, mapping, check=False))

    def extend(images):
        i = len(images)
        if i == len(gens):
            check(images)
            return
        for x in candidates[i]:
            if x in images:
                continue
            if all(orders[table[images[j], x]] == pair_orders[(j, i)] for j in range(i)):
                extend(images + [x])

    extend([])
    result.sort(key=lambda f: tuple(f.mapping[gens_arr]) != tuple(gens))
    return result
