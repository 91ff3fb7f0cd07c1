"""Common eigenspace decomposition of a finite abelian matrix group."""

from dataclasses import dataclass
from math import lcm

from ..errors import ExponentNotDividingConductor, NotAbelian, PreconditionError
from ..exact_field import CycloNumber, root_of_unity_exponent
from ..group_core import Matrix, Semilinear
from .linalg import combine, nullspace, span_echelon


@dataclass
class Summand:
    basis: tuple  # reduced echelon rows
    character: tuple  # exponents k (eigenvalue zeta_m^k), one per element of A

    @property
    def dimension(self):
        return len(self.basis)


@dataclass
class EigenDecomposition:
    dimension: int
    conductor: int
    group_elements: tuple  # indices of A in the parent group, matching characters
    summands: list

    @property
    def dimensions(self):
        return [s.dimension for s in self.summands]

    def characters(self):
        return [list(s.character) for s in self.summands]


def linear_part(g):
    """The matrix of an element with trivial Galois part."""
    if isinstance(g, Matrix):
        return g
    if isinstance(g, Semilinear):
        if not g.aut.is_identity():
            raise PreconditionError("element has a nontrivial Galois part")
        return g.matrix
    raise PreconditionError(f"{g.kind} elements have no matrix part")


def _split(basis, a, lam, m):
    """{x in span(basis) : a x = lam x} as echelon rows."""
    # columns w_j = (a - lam) b_j; solve sum c_j w_j = 0
    cols = []
    for b in basis:
        ab = a.apply(b)
        cols.append(tuple(x - lam * y if y else x for x, y in zip(ab, b)))
    n = len(basis[0])
    system = [tuple(col[i] for col in cols) for i in range(n)]
    coeffs = nullspace(system, m)
    if not coeffs:
        return ()
    return span_echelon([combine(c, basis, m) for c in coeffs], m)


def common_eigenspaces(G, A):
    """Split k^n into the common eigenspaces of the abelian subgroup A.

    Requires every eigenvalue to be an m-th root of unity for the conductor m,
    which holds as soon as the exponent of A divides m.
    """
    if not A.is_abelian():
        raise NotAbelian("common eigenspaces need an abelian subgroup")
    m = G.conductor
    exp_A = 1
    orders = G.element_orders
    for a in A.elements:
        exp_A = lcm(exp_A, int(orders[a]))
    if m % exp_A:
        raise ExponentNotDividingConductor(
            f"exponent {exp_A} of A does not divide conductor {m}; lift the conductor"
        )
    n = G.dimension
    one = CycloNumber.from_rational(m, 1)
    zero = CycloNumber.from_rational(m, 0)
    pieces = [tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))]
    for g in A.gens:
        a = linear_part(G.element(g))
        step = m // int(orders[g])
        lams = [CycloNumber.zeta(m, k) for k in range(0, m, step)]
        nxt = []
        for basis in pieces:
            for lam in lams:
                sub = _split(basis, a, lam, m)
                if sub:
                    nxt.append(sub)
        pieces = nxt
    summands = []
    for basis in pieces:
        character = []
        for e in A.elements:
            a = linear_part(G.element(e))
            v = basis[0]
            pivot = next(i for i, x in enumerate(v) if x)
            lam = a.apply(v)[pivot] / v[pivot]
            k = root_of_unity_exponent(lam)
            if k is None:
                raise PreconditionError("eigenvalue is not a root of unity in the field")
            character.append(k)
        summands.append(Summand(basis, tuple(character)))
    summands.sort(key=lambda s: s.character)
    return EigenDecomposition(n, m, A.elements, summands)


def verify_decomposition(G, D):
    """(dimensions sum to n, scalar action on every basis vector, characters distinct)."""
    total = sum(D.dimensions) == D.dimension
    scalar = True
    for s in D.summands:
        for e, k in zip(D.group_elements, s.character):
            a = linear_part(G.element(e))
            lam = CycloNumber.zeta(D.conductor, k)
            for v in s.basis:
                if a.apply(v) != tuple(lam * x if x else x for x in v):
                    scalar = False
    chars = [s.character for s in D.summands]
    distinct = len(set(chars)) == len(chars)
    return total, scalar, distinct


def summand_image(g, summand, m):
    """Echelon basis of g . V for a semilinear or linear element g."""
    return span_echelon([g.apply(v) for v in summand.basis], m)
