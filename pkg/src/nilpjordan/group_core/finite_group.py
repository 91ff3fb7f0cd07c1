"""Fully enumerated finite groups, subgroups, quotients and homomorphisms.

Groups are enumerated by breadth-first closure.  Element ``i`` of a group is
the ``i``-th element discovered (identity first), and all group-theoretic
queries work on these integer indices through a multiplication table that is
built on first use from the right-multiplication maps recorded during closure.
"""

from collections import deque

import numpy as np

from ..errors import (
    CapExceeded,
    IncompatibleElements,
    IndexOutOfRange,
    NotAHomomorphism,
    NotNormal,
)

DEFAULT_CLOSURE_CAPS = {"permutation": 200_000, "matrix": 20_000, "semilinear": 20_000}


class FiniteGroup:
    """A finite group with elements indexed 0..order-1 (0 is the identity).

    ``elements`` holds the concrete elements for groups obtained by closure or
    by restricting a concrete group; quotients are abstract (table only).
    """

    def __init__(
        self,
        order,
        gens,
        *,
        kind="abstract",
        elements=None,
        table=None,
        right=None,
        tree=None,
        name=None,
        conductor=None,
        dimension=None,
    ):
        self.order = int(order)
        self.gens = tuple(int(g) for g in gens)
        self.kind = kind
        self.elements = elements
        self.name = name
        self.conductor = conductor
        self.dimension = dimension
        self.embedding = None
        self._table = table
        self._right = right
        self._tree = tree
        self._inverse = None
        self._commuting = None
        self._orders = None
        self._index = None

    def __len__(self):
        return self.order

    def __repr__(self):
        label = self.name or self.kind
        return f"<FiniteGroup {label} order={self.order}>"

    @property
    def table(self):
        if self._table is None:
            n = self.order
            table = np.empty((n, n), dtype=np.intp)
            table[:, 0] = np.arange(n)
            parent, genpos = self._tree
            right = self._right
            for b in range(1, n):
                table[:, b] = right[genpos[b]][table[:, parent[b]]]
            self._table = table
        return self._table

    @property
    def inverse(self):
        if self._inverse is None:
            rows, cols = np.nonzero(self.table == 0)
            inv = np.empty(self.order, dtype=np.intp)
            inv[rows] = cols
            self._inverse = inv
        return self._inverse

    @property
    def commuting(self):
        """Boolean matrix: commuting[a, b] iff ab = ba."""
        if self._commuting is None:
            self._commuting = self.table == self.table.T
        return self._commuting

    @property
    def element_orders(self):
        if self._orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.intp)
            ar = np.arange(n)
            power = ar.copy()
            k = 1
            while True:
                hit = (power == 0) & (orders == 0)
                orders[hit] = k
                if orders.all():
                    break
                power = self.table[power, ar]
                k += 1
            self._orders = orders
        return self._orders

    @property
    def exponent(self):
        return int(np.lcm.reduce(self.element_orders)) if self.order else 1

    def is_abelian(self):
        return bool(self.commuting.all())

    def mul(self, a, b):
        return int(self.table[a, b])

    def inv(self, a):
        return int(self.inverse[a])

    def element(self, i):
        if self.elements is None:
            raise IncompatibleElements("abstract group has no concrete elements")
        return self.elements[i]

    def index_of(self, element):
        if self.elements is None:
            raise IncompatibleElements("abstract group has no concrete elements")
        if self._index is None:
            self._index = {g.key: i for i, g in enumerate(self.elements)}
        return self._index[element.key]

    def check_index(self, i):
        if not 0 <= int(i) < self.order:
            raise IndexOutOfRange(f"element index {i} out of range for order {self.order}")
        return int(i)


def closure(generators, cap=None, name=None):
    """Enumerate the group generated by concrete elements.

    Raises CapExceeded when more than ``cap`` distinct elements appear.
    """
    generators = list(generators)
    if not generators:
        raise IncompatibleElements("closure needs at least one generator")
    sig = generators[0].signature()
    for g in generators[1:]:
        if g.signature() != sig:
            raise IncompatibleElements(
                f"generators disagree on ambient structure: {sig} vs {g.signature()}"
            )
    kind = sig[0]
    if cap is None:
        cap = DEFAULT_CLOSURE_CAPS[kind]
    identity = generators[0].identity()
    elements = [identity]
    index = {identity.key: 0}
    right = [[] for _ in generators]
    parent = [0]
    genpos = [0]
    i = 0
    while i < len(elements):
        x = elements[i]
        for k, s in enumerate(generators):
            y = x * s
            key = y.key
            j = index.get(key)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise CapExceeded(cap)
                index[key] = j
                elements.append(y)
                parent.append(i)
                genpos.append(k)
            right[k].append(j)
        i += 1
    gens = [right[k][0] for k in range(len(generators))]
    group = FiniteGroup(
        len(elements),
        gens,
        kind=kind,
        elements=elements,
        right=[np.array(r, dtype=np.intp) for r in right],
        tree=(parent, genpos),
        name=name,
        conductor=sig[2] if kind != "permutation" else None,
        dimension=sig[1],
    )
    group._index = index
    return group


def from_table(table, gens=None, name=None):
    """Abstract group from a Cayley table with identity at index 0."""
    table = np.asarray(table, dtype=np.intp)
    if gens is None:
        gens = _greedy_generators(table, np.ones(len(table), dtype=bool))
    return FiniteGroup(len(table), gens, table=table, name=name)


class Subgroup:
    """A subgroup of ``parent`` stored as a sorted tuple of element indices."""

    __slots__ = ("parent", "mask", "elements", "_gens", "_hash")

    def __init__(self, parent, mask, gens=None):
        self.parent = parent
        self.mask = mask
        self.elements = tuple(int(i) for i in np.flatnonzero(mask))
        self._gens = None if gens is None else tuple(int(g) for g in gens)
        self._hash = None

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, i):
        return bool(self.mask[i])

    @property
    def gens(self):
        if self._gens is None:
            self._gens = tuple(_greedy_generators(self.parent.table, self.mask))
        return self._gens

    @property
    def array(self):
        return np.array(self.elements, dtype=np.intp)

    def key(self):
        return self.elements

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.elements == other.elements
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.elements)
        return self._hash

    def __le__(self, other):
        return bool(np.all(other.mask[self.mask]))

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.parent!r}>"

    def is_abelian(self):
        idx = self.array
        return bool(self.parent.commuting[np.ix_(idx, idx)].all())


def _greedy_generators(table, mask):
    gens = []
    members = np.zeros(len(table), dtype=bool)
    members[0] = True
    for i in np.flatnonzero(mask):
        if not members[i]:
            gens.append(int(i))
            members = _close_mask(table, gens)
    return gens


def _close_mask(table, seeds, start=None):
    """Mask of the subgroup generated by ``seeds`` (optionally joined with
    the subgroup whose mask is ``start``)."""
    n = len(table)
    seeds = np.unique(np.asarray(list(seeds), dtype=np.intp))
    if start is None:
        members = np.zeros(n, dtype=bool)
        members[0] = True
        frontier = np.array([0], dtype=np.intp)
    else:
        members = start.copy()
        frontier = np.flatnonzero(members)
    if seeds.size == 0:
        return members
    while frontier.size:
        prods = table[np.ix_(frontier, seeds)].ravel()
        new = np.unique(prods[~members[prods]])
        members[new] = True
        frontier = new
    return members


def _mask(G, indices):
    m = np.zeros(G.order, dtype=bool)
    m[np.asarray(list(indices), dtype=np.intp)] = True
    return m


def subgroup_generated(G, seed):
    seed = [G.check_index(i) for i in seed]
    return Subgroup(G, _close_mask(G.table, seed), gens=[s for s in seed if s])


def subgroup_from_elements(G, indices):
    """Wrap a set of indices already known to form a subgroup."""
    return Subgroup(G, _mask(G, [G.check_index(i) for i in indices] or [0]))


def trivial_subgroup(G):
    return Subgroup(G, _mask(G, [0]), gens=())


def whole_group(G):
    return Subgroup(G, np.ones(G.order, dtype=bool), gens=G.gens)


def index(G, H):
    if G.order % H.order:
        raise AssertionError("Lagrange violated: subgroup order does not divide group order")
    return G.order // H.order


def join(H, K):
    G = H.parent
    gens = H.gens + K.gens
    return Subgroup(G, _close_mask(G.table, gens, start=H.mask), gens=gens)


def intersection(H, K):
    return Subgroup(H.parent, H.mask & K.mask)


def is_normal(G, H):
    """True when g h g^-1 lies in H for every generator g of G and h in H."""
    h = H.array
    gens = np.array(G.gens, dtype=np.intp)
    if gens.size == 0:
        return True
    conj = G.table[G.table[np.ix_(gens, h)], G.inverse[gens][:, None]]
    return bool(H.mask[conj].all())


def centralizer(G, S):
    """All g in G commuting with every element of S (indices or a Subgroup)."""
    if isinstance(S, Subgroup):
        S = S.gens
    S = [G.check_index(s) for s in S]
    if not S:
        return whole_group(G)
    mask = np.logical_and.reduce(G.commuting[S], axis=0)
    return Subgroup(G, mask)


def center(G):
    return centralizer(G, G.gens)


def commutator(G, a, b):
    """[a, b] = a b a^-1 b^-1."""
    a, b = G.check_index(a), G.check_index(b)
    t = G.table
    return int(t[t[a, b], t[G.inverse[a], G.inverse[b]]])


def commutator_array(G, A, B):
    """All commutators [a, b] for a in A, b in B as an |A| x |B| array."""
    t = G.table
    a = np.asarray(A, dtype=np.intp)
    b = np.asarray(B, dtype=np.intp)
    ab = t[np.ix_(a, b)]
    inv_ab = t[np.ix_(G.inverse[a], G.inverse[b])]
    return t[ab, inv_ab]


def commutator_subgroup(G, A=None, B=None):
    """The subgroup generated by all [a, b], a in A, b in B (default G)."""
    A = whole_group(G) if A is None else A
    B = whole_group(G) if B is None else B
    # generator commutators only give [A, B] up to normal closure; use all pairs
    comms = np.unique(commutator_array(G, A.array, B.array))
    return Subgroup(G, _close_mask(G.table, comms))


class GroupHom:
    """A homomorphism given by its full index map domain -> codomain."""

    def __init__(self, domain, codomain, mapping, check=True):
        self.domain = domain
        self.codomain = codomain
        self.mapping = np.asarray(mapping, dtype=np.intp)
        if check:
            m = self.mapping
            if m.shape != (domain.order,) or m.min() < 0 or m.max() >= codomain.order:
                raise NotAHomomorphism("mapping has the wrong shape or range")
            if m[0] != 0:
                raise NotAHomomorphism("identity is not mapped to identity")
            lhs = m[domain.table]
            rhs = codomain.table[m[:, None], m[None, :]]
            if not np.array_equal(lhs, rhs):
                raise NotAHomomorphism("f(xy) != f(x) f(y) for some pair")

    def __call__(self, i):
        return int(self.mapping[i])

    def is_injective(self):
        return len(np.unique(self.mapping)) == self.domain.order

    def is_bijective(self):
        return self.domain.order == self.codomain.order and self.is_injective()


def kernel(f):
    return Subgroup(f.domain, f.mapping == 0)


def image(f, H=None):
    src = f.mapping if H is None else f.mapping[H.array]
    return Subgroup(f.codomain, _mask(f.codomain, src))


def preimage(f, K):
    return Subgroup(f.domain, K.mask[f.mapping])


def spanning_tree(table, gens):
    """BFS over right multiplication by ``gens`` from the identity.

    Returns (order, parent, genpos) where ``order`` lists reached elements in
    discovery order and x = parent[x] * gens[genpos[x]] for x != identity.
    """
    n = len(table)
    parent = np.full(n, -1, dtype=np.intp)
    genpos = np.full(n, -1, dtype=np.intp)
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    order = [0]
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for k, s in enumerate(gens):
            y = int(table[x, s])
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                genpos[y] = k
                order.append(y)
                queue.append(y)
    return order, parent, genpos


def _extend_on_tree(tree, cod_table, images):
    order, parent, genpos = tree
    mapping = np.zeros(len(parent), dtype=np.intp)
    for x in order[1:]:
        mapping[x] = cod_table[mapping[parent[x]], images[genpos[x]]]
    return mapping


def hom_from_generators(G, codomain, images, gens=None, check=True):
    """Extend an assignment on generators (default ``G.gens``) to a homomorphism.

    Raises NotAHomomorphism when the assignment violates a relation of G or
    the generators do not generate G.
    """
    gens = list(G.gens if gens is None else gens)
    images = [codomain.check_index(i) for i in images]
    if len(images) != len(gens):
        raise NotAHomomorphism("one image per generator is required")
    tree = spanning_tree(G.table, gens)
    if len(tree[0]) != G.order:
        raise NotAHomomorphism("the given elements do not generate the group")
    mapping = _extend_on_tree(tree, codomain.table, images)
    return GroupHom(G, codomain, mapping, check=check)


def as_group(H, name=None):
    """The subgroup H as a group in its own right.

    The result's ``embedding`` array sends its indices to parent indices; its
    element 0 is the identity and elements keep the parent's order.
    """
    G = H.parent
    idx = H.array
    pos = np.full(G.order, -1, dtype=np.intp)
    pos[idx] = np.arange(len(idx))
    table = pos[G.table[np.ix_(idx, idx)]]
    elements = None if G.elements is None else [G.elements[i] for i in idx]
    gens = [int(pos[g]) for g in H.gens]
    sub = FiniteGroup(
        len(idx),
        gens,
        kind=G.kind,
        elements=elements,
        table=table,
        name=name,
        conductor=G.conductor,
        dimension=G.dimension,
    )
    sub.embedding = idx
    sub._position = pos
    return sub


def lift_subgroup(sub_group, K, parent):
    """Transport a subgroup K of ``sub_group = as_group(H)`` into ``parent``."""
    return Subgroup(parent, _mask(parent, sub_group.embedding[K.array]))


def restrict_subgroup(sub_group, K):
    """Transport a subgroup K of the parent (contained in H) into ``as_group(H)``."""
    pos = sub_group._position[K.array]
    if (pos < 0).any():
        raise IndexOutOfRange("subgroup is not contained in the restricted group")
    return Subgroup(sub_group, _mask(sub_group, pos))


def quotient(G, N):
    """G/N with cosets represented by their least index, in increasing order.

    Returns (Q, projection).
    """
    if not is_normal(G, N):
        raise NotNormal("quotient requires a normal subgroup")
    cosets = G.table[:, N.array]
    reps = cosets.min(axis=1)
    uniq = np.unique(reps)
    label = np.full(G.order, -1, dtype=np.intp)
    label[uniq] = np.arange(len(uniq))
    coset_id = label[reps]
    table = coset_id[G.table[np.ix_(uniq, uniq)]]
    gens = sorted({int(coset_id[g]) for g in G.gens} - {0})
    name = f"{G.name}/N" if G.name else None
    Q = FiniteGroup(len(uniq), gens, table=table, name=name)
    Q.representatives = uniq
    return Q, GroupHom(G, Q, coset_id, check=True)
