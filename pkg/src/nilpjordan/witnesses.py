"""Named groups: Heisenberg witnesses, the small-group corpus and semilinear samples."""

from dataclasses import dataclass, field
from math import lcm

from .errors import CapExceeded, IncompatibleElements, NotPrime
from .exact_field import CycloNumber, FieldAutomorphism, apply_automorphism, t_variable
from .group_core import Matrix, Permutation, Semilinear, closure, permutation_matrix


@dataclass
class WitnessSpec:
    """Expected properties of a named family member.

    The expectations are what the tests recompute from scratch; nothing here
    is consulted by the algorithms.
    """

    family: str
    params: dict
    expected: dict = field(default_factory=dict)


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _c(m, q):
    return CycloNumber.from_rational(m, q)


def heisenberg_generators(p):
    """x = diag(1, z, ..., z^(p-1)) and the cyclic shift y: e_i -> e_(i+1)."""
    zero, one = _c(p, 0), _c(p, 1)
    x = Matrix.diagonal(p, [CycloNumber.zeta(p, i) for i in range(p)])
    rows = [[zero] * p for _ in range(p)]
    for i in range(p):
        rows[(i + 1) % p][i] = one
    y = Matrix(p, rows)
    return x, y


def heisenberg_monomial(p, cap=7):
    """The Heisenberg group of order p^3 in its p-dimensional monomial form."""
    if not _is_prime(p) or p == 2:
        raise NotPrime(f"heisenberg_monomial needs an odd prime, got {p}")
    if p > cap:
        raise CapExceeded(cap, f"p = {p} exceeds the Heisenberg cap {cap}")
    x, y = heisenberg_generators(p)
    return closure([x, y], name=f"H{p}")


def cyclic(n):
    if n == 1:
        return closure([Permutation([0])], name="C1")
    return closure([Permutation.from_cycles(n, list(range(n)))], name=f"C{n}")


def dihedral(n):
    """The dihedral group of order 2n acting on an n-gon (n >= 3)."""
    if n < 3:
        raise ValueError("dihedral(n) needs n >= 3")
    rot = Permutation.from_cycles(n, list(range(n)))
    refl = Permutation([(-i) % n for i in range(n)])
    return closure([rot, refl], name=f"D{n}")


def symmetric(n):
    if n == 1:
        return closure([Permutation([0])], name="S1")
    if n == 2:
        return closure([Permutation([1, 0])], name="S2")
    return closure(
        [Permutation.from_cycles(n, [0, 1]), Permutation.from_cycles(n, list(range(n)))],
        name=f"S{n}",
    )


def quaternion8():
    m = 4
    z, zero, one = CycloNumber.zeta(m), _c(m, 0), _c(m, 1)
    i = Matrix(m, [[z, zero], [zero, -z]])
    j = Matrix(m, [[zero, one], [-one, zero]])
    return closure([i, j], name="Q8")


def _as_matrix(g, conductor):
    if isinstance(g, Permutation):
        return permutation_matrix(g, conductor)
    if isinstance(g, Matrix):
        if g.conductor == conductor:
            return g
        return Matrix(conductor, [[x.lift(conductor) for x in r] for r in g.rows], check=False)
    raise IncompatibleElements(f"direct_product does not support {g.kind} elements")


def _block(a, b, conductor):
    zero = _c(conductor, 0)
    n1, n2 = a.dimension, b.dimension
    rows = [list(r) + [zero] * n2 for r in a.rows]
    rows += [[zero] * n1 + list(r) for r in b.rows]
    return Matrix(conductor, rows, check=False)


def direct_product(G, H, name=None):
    """G x H, realized concretely (disjoint permutations or block matrices)."""
    name = name or f"{G.name}x{H.name}"
    gg = [G.element(i) for i in G.gens] or [G.element(0)]
    hh = [H.element(i) for i in H.gens] or [H.element(0)]
    if G.kind == H.kind == "permutation":
        d1, d2 = G.dimension, H.dimension
        gens = [Permutation(list(g.images) + [d1 + k for k in range(d2)]) for g in gg]
        gens += [Permutation(list(range(d1)) + [d1 + k for k in h.images]) for h in hh]
        return closure(gens, name=name)
    m = lcm(G.conductor or 1, H.conductor or 1)
    ga = [_as_matrix(g, m) for g in gg]
    hb = [_as_matrix(h, m) for h in hh]
    id_g, id_h = ga[0].identity(), hb[0].identity()
    gens = [_block(a, id_h, m) for a in ga] + [_block(id_g, b, m) for b in hb]
    return closure(gens, name=name)


def corpus():
    """The shipped small-group corpus (orders <= 200)."""
    C = {n: cyclic(n) for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 12)}
    D = {n: dihedral(n) for n in (3, 4, 5, 6, 8)}
    S = {n: symmetric(n) for n in (3, 4, 5)}
    Q8 = quaternion8()
    H3 = heisenberg_monomial(3)
    groups = list(C.values()) + list(D.values()) + list(S.values())
    groups += [Q8, H3, heisenberg_monomial(5)]
    products = [
        (C[2], C[2]),
        (C[3], C[3]),
        (C[4], C[2]),
        (S[3], C[2]),
        (Q8, C[2]),
        (D[4], C[2]),
        (H3, C[2]),
        (S[3], S[3]),
        (D[4], C[3]),
        (Q8, C[3]),
        (S[4], C[2]),
        (H3, C[3]),
        (D[4], S[3]),
    ]
    groups += [direct_product(a, b) for a, b in products]
    groups.append(direct_product(direct_product(C[2], C[2]), C[2], name="C2xC2xC2"))
    return groups


def witness_specs():
    specs = []
    for p in (3, 5):
        specs.append(
            WitnessSpec(
                "heisenberg",
                {"p": p},
                {
                    "order": p**3,
                    "class": 2,
                    "center_order": p,
                    "best_abelian_index": p,
                    "cd_index": p**2,
                },
            )
        )
    specs.append(WitnessSpec("quaternion8", {}, {"order": 8, "class": 2}))
    specs.append(WitnessSpec("dihedral", {"n": 4}, {"order": 8, "class": 2}))
    return specs


# semilinear samples ---------------------------------------------------------


def _sl(matrix, aut=None):
    if aut is None:
        aut = FieldAutomorphism.identity(matrix.conductor)
    return Semilinear(matrix, aut)


def _rot4(m):
    """t -> (t + 1)/(1 - t), an automorphism of order 4."""
    return FieldAutomorphism(m, 1, 1, -1, 1)


def _antidiag(m, a, b):
    zero = _c(m, 0)
    return Matrix(m, [[zero, a], [b, zero]])


def sample_order8_inversion():
    m = 4
    t = t_variable(m)
    gens = [
        _sl(Matrix(m, [[CycloNumber.zeta(m)]])),
        _sl(Matrix(m, [[t]]), FieldAutomorphism.inversion(m)),
    ]
    return closure(gens, name="order8_inversion")


def sample_heisenberg3():
    x, y = heisenberg_generators(3)
    return closure([_sl(x), _sl(y)], name="heisenberg3_trivial_gamma")


def sample_d5_x_c3():
    # conductor 30, not 15: the reflections have order 2 and -1 must be a power of zeta
    m = 30
    z5 = CycloNumber.zeta(m, 6)
    one = _c(m, 1)
    gens = [
        _sl(Matrix.diagonal(m, [z5, z5 ** -1])),
        _sl(_antidiag(m, one, one)),
        _sl(Matrix.identity_matrix(m, 2), FieldAutomorphism.scaling(m, CycloNumber.zeta(m, 10))),
    ]
    return closure(gens, name="d5_x_c3")


def sample_q8_x_rot3():
    m = 12
    z4 = CycloNumber.zeta(m, 3)
    zero, one = _c(m, 0), _c(m, 1)
    gens = [
        _sl(Matrix(m, [[z4, zero], [zero, -z4]])),
        _sl(Matrix(m, [[zero, one], [-one, zero]])),
        _sl(Matrix.identity_matrix(m, 2), FieldAutomorphism.scaling(m, CycloNumber.zeta(m, 4))),
    ]
    return closure(gens, name="q8_x_rot3")


def sample_swap_rot4():
    m = 4
    one = _c(m, 1)
    gens = [
        _sl(Matrix.diagonal(m, [CycloNumber.zeta(m), one])),
        _sl(_antidiag(m, one, one), _rot4(m)),
    ]
    return closure(gens, name="swap_rot4")


def sample_twisted_rot4():
    m = 4
    t = t_variable(m)
    sigma = _rot4(m)
    # t / sigma(t) is a coboundary, so (t/sigma(t), sigma) has order 4
    f = t / apply_automorphism(sigma, t)
    gens = [_sl(Matrix(m, [[CycloNumber.zeta(m)]])), _sl(Matrix(m, [[f]]), sigma)]
    return closure(gens, name="twisted_rot4")


def sample_heisenberg3_x_inversion():
    m = 3
    x, y = heisenberg_generators(3)
    gens = [_sl(x), _sl(y), _sl(x.identity(), FieldAutomorphism.inversion(m))]
    return closure(gens, name="heisenberg3_x_inversion")


def sample_antidiag_t_rot3():
    # N is S3, of exponent 6
    m = 6
    t = t_variable(m)
    z = CycloNumber.zeta(m, 2)
    gens = [
        _sl(Matrix.diagonal(m, [z, z ** -1])),
        _sl(_antidiag(m, t, 1 / t), FieldAutomorphism.scaling(m, z)),
    ]
    return closure(gens, name="antidiag_t_rot3")


SEMILINEAR_SAMPLES = {
    "order8_inversion": sample_order8_inversion,
    "heisenberg3_trivial_gamma": sample_heisenberg3,
    "d5_x_c3": sample_d5_x_c3,
    "q8_x_rot3": sample_q8_x_rot3,
    "swap_rot4": sample_swap_rot4,
    "twisted_rot4": sample_twisted_rot4,
    "heisenberg3_x_inversion": sample_heisenberg3_x_inversion,
    "antidiag_t_rot3": sample_antidiag_t_rot3,
}


def semilinear_samples():
    return [build() for build in SEMILINEAR_SAMPLES.values()]


def bad_gamma_sample():
    """Galois parts t -> 1/t and t -> 1 - t generate a non-abelian group (S3)."""
    m = 4
    ident = Matrix.identity_matrix(m, 1)
    gens = [
        _sl(ident, FieldAutomorphism.inversion(m)),
        _sl(ident, FieldAutomorphism(m, -1, 1, 0, 1)),
    ]
    return closure(gens, name="bad_gamma")
