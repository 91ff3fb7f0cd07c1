"""Concrete group elements: permutations, invertible matrices, semilinear pairs.

Every element exposes ``key`` (a canonical string, equal for equal elements),
``identity()``, ``*`` and ``inverse()``.  A semilinear pair (A, s) acts on
column vectors by v -> A . s(v), so (A, s)(B, u) = (A . s(B), s o u).
"""

from ..errors import IncompatibleElements, OrderExceedsCap, ValidationError
from ..exact_field import CycloNumber, FieldAutomorphism, apply_automorphism


class Permutation:
    __slots__ = ("images", "_key")
    kind = "permutation"

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValidationError(f"not a permutation: {list(images)}")
        self.images = images
        self._key = None

    @classmethod
    def from_cycles(cls, degree, *cycles):
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def signature(self):
        return ("permutation", self.degree)

    def identity(self):
        return Permutation(range(self.degree))

    def __mul__(self, other):
        # (self * other)(i) = self(other(i))
        p = self.images
        out = Permutation.__new__(Permutation)
        out.images = tuple(p[j] for j in other.images)
        out._key = None
        return out

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    @property
    def key(self):
        if self._key is None:
            self._key = "P[" + ",".join(map(str, self.images)) + "]"
        return self._key

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def _zero(m):
    return CycloNumber.from_rational(m, 0)


def _one(m):
    return CycloNumber.from_rational(m, 1)


def determinant(rows, conductor):
    """Exact determinant by Gaussian elimination over the field."""
    a = [list(r) for r in rows]
    n = len(a)
    det = _one(conductor)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return _zero(conductor)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det = det * p
        inv = 1 / p
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f = f * inv
                for c in range(col, n):
                    if a[col][c]:
                        a[r][c] = a[r][c] - f * a[col][c]
    return det


def _gauss_jordan_inverse(rows, conductor):
    n = len(rows)
    zero, one = _zero(conductor), _one(conductor)
    a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            raise ValidationError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv if x else x for x in a[col]]
        for r in range(n):
            f = a[r][col]
            if r != col and f:
                a[r] = [x - f * y if y else x for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


class Matrix:
    __slots__ = ("conductor", "rows", "_key")
    kind = "matrix"

    def __init__(self, conductor, rows, check=True):
        rows = tuple(tuple(r) for r in rows)
        self.conductor = conductor
        self.rows = rows
        self._key = None
        if check:
            n = len(rows)
            if any(len(r) != n for r in rows):
                raise ValidationError("matrix is not square")
            for r in rows:
                for x in r:
                    if x.conductor != conductor:
                        raise ValidationError(
                            f"entry conductor {x.conductor} differs from {conductor}"
                        )
            if not determinant(rows, conductor):
                raise ValidationError("matrix is singular")

    @classmethod
    def identity_matrix(cls, conductor, n):
        zero, one = _zero(conductor), _one(conductor)
        return cls(
            conductor,
            [[one if i == j else zero for j in range(n)] for i in range(n)],
            check=False,
        )

    @classmethod
    def diagonal(cls, conductor, entries):
        zero = _zero(conductor)
        n = len(entries)
        return cls(
            conductor, [[entries[i] if i == j else zero for j in range(n)] for i in range(n)]
        )

    @property
    def dimension(self):
        return len(self.rows)

    def signature(self):
        return ("matrix", self.dimension, self.conductor)

    def identity(self):
        return Matrix.identity_matrix(self.conductor, self.dimension)

    def __mul__(self, other):
        n = len(self.rows)
        b = other.rows
        zero = _zero(self.conductor)
        out = []
        for row in self.rows:
            nz = [(k, x) for k, x in enumerate(row) if x]
            new = []
            for j in range(n):
                s = zero
                for k, x in nz:
                    y = b[k][j]
                    if y:
                        s = s + x * y
                new.append(s)
            out.append(tuple(new))
        return Matrix(self.conductor, out, check=False)

    def apply(self, vector):
        zero = _zero(self.conductor)
        out = []
        for row in self.rows:
            s = zero
            for x, y in zip(row, vector):
                if x and y:
                    s = s + x * y
            out.append(s)
        return tuple(out)

    def map_entries(self, f):
        return Matrix(self.conductor, [[f(x) for x in r] for r in self.rows], check=False)

    def is_identity(self):
        return all(
            (x.is_constant and x.is_one()) if i == j else not x
            for i, r in enumerate(self.rows)
            for j, x in enumerate(r)
        )

    def inverse(self):
        return Matrix(self.conductor, _gauss_jordan_inverse(self.rows, self.conductor), check=False)

    @property
    def key(self):
        if self._key is None:
            self._key = "M[" + ";".join(",".join(str(x) for x in r) for r in self.rows) + "]"
        return self._key

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({self.conductor}, {self.key})"


class Semilinear:
    __slots__ = ("matrix", "aut", "_key")
    kind = "semilinear"

    def __init__(self, matrix, aut):
        if matrix.conductor != aut.conductor:
            raise ValidationError("matrix and automorphism conductors differ")
        self.matrix = matrix
        self.aut = aut
        self._key = None

    @property
    def conductor(self):
        return self.matrix.conductor

    @property
    def dimension(self):
        return self.matrix.dimension

    def signature(self):
        return ("semilinear", self.dimension, self.conductor)

    def identity(self):
        return Semilinear(self.matrix.identity(), FieldAutomorphism.identity(self.conductor))

    def __mul__(self, other):
        sigma = self.aut
        b = other.matrix
        if not sigma.is_identity():
            b = b.map_entries(lambda x: apply_automorphism(sigma, x))
        return Semilinear(self.matrix * b, sigma * other.aut)

    def apply(self, vector):
        return self.matrix.apply(tuple(apply_automorphism(self.aut, x) for x in vector))

    def is_identity(self):
        return self.aut.is_identity() and self.matrix.is_identity()

    def has_trivial_galois_part(self):
        return self.aut.is_identity()

    def inverse(self):
        # (A, s)^-1 = (s^-1(A^-1), s^-1)
        a, b, c, d = self.aut.mobius
        back = FieldAutomorphism(self.conductor, d, -b, -c, a)
        inv = self.matrix.inverse()
        if not back.is_identity():
            inv = inv.map_entries(lambda x: apply_automorphism(back, x))
        return Semilinear(inv, back)

    @property
    def key(self):
        if self._key is None:
            self._key = f"S[{self.matrix.key[1:]}|{self.aut.key}]"
        return self._key

    def __eq__(self, other):
        return (
            isinstance(other, Semilinear)
            and self.matrix == other.matrix
            and self.aut == other.aut
        )

    def __hash__(self):
        return hash((self.matrix, self.aut))

    def __repr__(self):
        return f"Semilinear({self.key})"


def as_semilinear(g):
    if isinstance(g, Semilinear):
        return g
    if isinstance(g, Matrix):
        return Semilinear(g, FieldAutomorphism.identity(g.conductor))
    raise IncompatibleElements(f"cannot view {g.kind} element as semilinear")


def permutation_matrix(perm, conductor):
    """The matrix sending basis vector e_i to e_perm(i)."""
    zero, one = _zero(conductor), _one(conductor)
    n = perm.degree
    rows = [[zero] * n for _ in range(n)]
    for i, j in enumerate(perm.images):
        rows[j][i] = one
    return Matrix(conductor, rows, check=False)


def element_order(g, cap=100_000):
    """Least k <= cap with g^k = 1."""
    power = g
    for k in range(1, cap + 1):
        if power.is_identity():
            return k
        power = power * g
    raise OrderExceedsCap(f"element order exceeds {cap}")

