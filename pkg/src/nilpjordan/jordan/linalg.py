"""Exact row reduction over Q(zeta_m)(t)."""

from ..exact_field import CycloNumber


def _zero(m):
    return CycloNumber.from_rational(m, 0)


def rref(rows, conductor):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = [list(r) for r in rows]
    if not a:
        return (), ()
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv if x else x for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return tuple(tuple(row) for row in a[:r]), tuple(pivots)


def nullspace(rows, conductor):
    """Basis of {x : rows . x = 0} (x a column vector)."""
    if not rows:
        return ()
    ncols = len(rows[0])
    red, pivots = rref(rows, conductor)
    zero = _zero(conductor)
    one = CycloNumber.from_rational(conductor, 1)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [zero] * ncols
        x[f] = one
        for row, p in zip(red, pivots):
            if row[f]:
                x[p] = -row[f]
        basis.append(tuple(x))
    return tuple(basis)


def span_echelon(vectors, conductor):
    """Canonical basis (reduced echelon rows) of the span of ``vectors``."""
    return rref(vectors, conductor)[0]


def scale(vector, c):
    return tuple(x * c if x else x for x in vector)


def combine(coeffs, basis, conductor):
    zero = _zero(conductor)
    out = [zero] * len(basis[0])
    for c, b in zip(coeffs, basis):
        if c:
            out = [x + c * y if y else x for x, y in zip(out, b)]
    return tuple(out)
