"""Exact scalars of Q(zeta_m) and Q(zeta_m)(t).

``CycloNumber`` stores the reduced residue modulo the m-th cyclotomic
polynomial in the power basis 1, z, ..., z^(phi(m)-1).  ``RationalFunction``
stores a reduced fraction of polynomials in t with ``CycloNumber``
coefficients and a monic denominator; a constant rational function is always
collapsed to the corresponding ``CycloNumber``, so each field element has
exactly one representation.
"""

from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

from ..errors import ConductorMismatch, DivisionByZero
from . import polyq


@lru_cache(maxsize=None)
def _cyclo_data(m):
    phi = polyq.cyclotomic_polynomial(m)
    n = len(phi) - 1
    pows = []
    cur = [Fraction(0)] * n
    if n:
        cur[0] = Fraction(1)
    for _ in range(max(m, 2 * n - 1)):
        pows.append(tuple(cur))
        # multiply by x, reduce with the monic Phi_m
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(n):
                cur[i] -= top * phi[i]
    return n, tuple(pows)


def degree_of(m):
    return _cyclo_data(m)[0]


class CycloNumber:
    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor, coeffs=()):
        n, pows = _cyclo_data(conductor)
        coeffs = [Fraction(c) for c in coeffs]
        out = coeffs[:n] + [Fraction(0)] * (n - len(coeffs[:n]))
        for k in range(n, len(coeffs)):
            c = coeffs[k]
            if c:
                v = pows[k] if k < len(pows) else _power_vector(conductor, k)
                for i in range(n):
                    out[i] += c * v[i]
        self.conductor = conductor
        self.coeffs = tuple(out)
        self._hash = None

    @classmethod
    def _make(cls, conductor, coeffs):
        obj = cls.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, conductor, q):
        n = degree_of(conductor)
        return cls._make(conductor, (Fraction(q),) + (Fraction(0),) * (n - 1))

    @classmethod
    def zeta(cls, conductor, k=1):
        """The root of unity zeta_m^k."""
        _, pows = _cyclo_data(conductor)
        return cls._make(conductor, pows[k % conductor])

    # predicates -------------------------------------------------------
    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def is_one(self):
        return self.coeffs[0] == 1 and self.is_rational()

    @property
    def is_constant(self):
        return True

    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            return self.conductor == other.conductor and self.coeffs == other.coeffs
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, self.coeffs))
        return self._hash

    # arithmetic -------------------------------------------------------
    def _add(self, other):
        return CycloNumber._make(
            self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def _neg(self):
        return CycloNumber._make(self.conductor, tuple(-a for a in self.coeffs))

    def _scale(self, c):
        return CycloNumber._make(self.conductor, tuple(c * a for a in self.coeffs))

    def _mul(self, other):
        a, b = self.coeffs, other.coeffs
        if self.is_rational():
            return other._scale(a[0])
        if other.is_rational():
            return self._scale(b[0])
        n, pows = _cyclo_data(self.conductor)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            c = prod[k]
            if c:
                v = pows[k]
                for i in range(n):
                    out[i] += c * v[i]
        return CycloNumber._make(self.conductor, tuple(out))

    def _inv(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        if self.is_rational():
            return self._scale_to(1 / self.coeffs[0])
        phi = polyq.cyclotomic_polynomial(self.conductor)
        g, s, _ = polyq.xgcd(polyq.trim(self.coeffs), phi)
        assert g == (Fraction(1),)
        return CycloNumber(self.conductor, s)

    def _scale_to(self, q):
        return CycloNumber.from_rational(self.conductor, q)

    __add__ = lambda self, other: field_add(self, other)
    __radd__ = lambda self, other: field_add(other, self)
    __sub__ = lambda self, other: field_add(self, field_neg(_coerce(other, self)))
    __rsub__ = lambda self, other: field_add(other, field_neg(self))
    __mul__ = lambda self, other: field_mul(self, other)
    __rmul__ = lambda self, other: field_mul(other, self)
    __truediv__ = lambda self, other: field_mul(self, field_inv(_coerce(other, self)))
    __rtruediv__ = lambda self, other: field_mul(other, field_inv(self))
    __neg__ = lambda self: field_neg(self)
    __pow__ = lambda self, k: field_pow(self, k)

    def lift(self, new_conductor):
        """Re-express in Q(zeta_M) for a multiple M of the conductor."""
        m = self.conductor
        if new_conductor % m:
            raise ConductorMismatch(f"{m} does not divide {new_conductor}")
        e = new_conductor // m
        n2, pows = _cyclo_data(new_conductor)
        out = [Fraction(0)] * n2
        for i, c in enumerate(self.coeffs):
            if c:
                v = pows[(i * e) % new_conductor]
                for j in range(n2):
                    out[j] += c * v[j]
        return CycloNumber._make(new_conductor, tuple(out))

    def __str__(self):
        return polyq.to_str(polyq.trim(self.coeffs), "z")

    def __repr__(self):
        return f"CycloNumber({self.conductor}, {str(self)!r})"

    @property
    def key(self):
        return str(self)


def _power_vector(m, k):
    _, pows = _cyclo_data(m)
    return pows[k % m]


# polynomials in t over Q(zeta_m): tuples of CycloNumber, lowest degree first


def _ptrim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i]._add(c)
    return _ptrim(out)


def _pneg(a):
    return tuple(c._neg() for c in a)


def _pscale(a, c):
    return tuple(x._mul(c) for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    m = a[0].conductor
    zero = CycloNumber.from_rational(m, 0)
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j]._add(x._mul(y))
    return _ptrim(out)


def _pdivmod(a, b):
    lead_inv = b[-1]._inv()
    a = list(a)
    db = len(b) - 1
    m = b[0].conductor
    zero = CycloNumber.from_rational(m, 0)
    quot = [zero] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if not c:
            continue
        q = c._mul(lead_inv)
        quot[k - db] = q
        for j, y in enumerate(b):
            a[k - db + j] = a[k - db + j]._add(q._mul(y)._neg())
    return _ptrim(quot), _ptrim(a[:db])


def _pmonic(a):
    return _pscale(a, a[-1]._inv())


def _pgcd(a, b):
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    return _pmonic(a)


def _pstr(p):
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        cs = str(c)
        simple = c.is_rational() or cs.lstrip("-").count(" ") == 0
        if not mono:
            parts.append(cs if simple else f"({cs})")
            continue
        if c.is_one():
            parts.append(mono)
        elif c == -1:
            parts.append(f"-{mono}")
        elif simple:
            parts.append(f"{cs}*{mono}")
        else:
            parts.append(f"({cs})*{mono}")
    out = parts[0]
    for s in parts[1:]:
        out += f" - {s[1:]}" if s.startswith("-") else f" + {s}"
    return out


class RationalFunction:
    """Reduced fraction num/den in Q(zeta_m)[t]; den is monic and nonconstant
    or num is nonconstant."""

    __slots__ = ("conductor", "num", "den", "_hash")

    def __init__(self, conductor, num, den):
        self.conductor = conductor
        self.num = num
        self.den = den
        self._hash = None

    @property
    def is_constant(self):
        return False

    def __bool__(self):
        return True

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (
                self.conductor == other.conductor
                and self.num == other.num
                and self.den == other.den
            )
        if isinstance(other, (CycloNumber, int, _RationalABC)):
            return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, self.num, self.den))
        return self._hash

    __add__ = CycloNumber.__add__
    __radd__ = CycloNumber.__radd__
    __sub__ = CycloNumber.__sub__
    __rsub__ = CycloNumber.__rsub__
    __mul__ = CycloNumber.__mul__
    __rmul__ = CycloNumber.__rmul__
    __truediv__ = CycloNumber.__truediv__
    __rtruediv__ = CycloNumber.__rtruediv__
    __neg__ = CycloNumber.__neg__
    __pow__ = CycloNumber.__pow__

    def lift(self, new_conductor):
        return RationalFunction(
            new_conductor,
            tuple(c.lift(new_conductor) for c in self.num),
            tuple(c.lift(new_conductor) for c in self.den),
        )

    def __str__(self):
        num = _pstr(self.num)
        if len(self.den) == 1:
            return num
        if len(self.num) > 1 and len([c for c in self.num if c]) > 1:
            num = f"({num})"
        elif " " in num:
            num = f"({num})"
        return f"{num}/({_pstr(self.den)})"

    def __repr__(self):
        return f"RationalFunction({self.conductor}, {str(self)!r})"

    @property
    def key(self):
        return str(self)


def make_rational_function(m, num, den):
    """Normalize num/den (polynomials over Q(zeta_m)) into canonical form."""
    num, den = _ptrim(num), _ptrim(den)
    if not den:
        raise DivisionByZero("zero denominator")
    if not num:
        return CycloNumber.from_rational(m, 0)
    if len(den) > 1:
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
    lead_inv = den[-1]._inv()
    if not den[-1].is_one():
        num = _pscale(num, lead_inv)
        den = _pscale(den, lead_inv)
    if len(den) == 1 and len(num) == 1:
        return num[0]
    return RationalFunction(m, num, den)


def t_variable(m):
    return RationalFunction(
        m,
        (CycloNumber.from_rational(m, 0), CycloNumber.from_rational(m, 1)),
        (CycloNumber.from_rational(m, 1),),
    )


def _as_fraction(x):
    if isinstance(x, CycloNumber):
        return (x,), (CycloNumber.from_rational(x.conductor, 1),)
    return x.num, x.den


def _coerce(x, like):
    if isinstance(x, (CycloNumber, RationalFunction)):
        return x
    if isinstance(x, (int, _RationalABC)):
        return CycloNumber.from_rational(like.conductor, x)
    raise TypeError(f"cannot use {type(x).__name__} as a field scalar")


def _check_pair(x, y):
    if isinstance(x, (int, _RationalABC)):
        x = _coerce(x, y)
    if isinstance(y, (int, _RationalABC)):
        y = _coerce(y, x)
    if not isinstance(x, (CycloNumber, RationalFunction)) or not isinstance(
        y, (CycloNumber, RationalFunction)
    ):
        raise TypeError("field operations need CycloNumber or RationalFunction")
    if x.conductor != y.conductor:
        raise ConductorMismatch(
            f"conductors differ: {x.conductor} vs {y.conductor}; use lift_conductor"
        )
    return x, y


def field_add(x, y):
    x, y = _check_pair(x, y)
    if isinstance(x, CycloNumber) and isinstance(y, CycloNumber):
        return x._add(y)
    m = x.conductor
    a, b = _as_fraction(x)
    c, d = _as_fraction(y)
    if b == d:
        return make_rational_function(m, _padd(a, c), b)
    return make_rational_function(m, _padd(_pmul(a, d), _pmul(c, b)), _pmul(b, d))


def field_neg(x):
    if isinstance(x, CycloNumber):
        return x._neg()
    return RationalFunction(x.conductor, _pneg(x.num), x.den)


def field_sub(x, y):
    x, y = _check_pair(x, y)
    return field_add(x, field_neg(y))


def field_mul(x, y):
    x, y = _check_pair(x, y)
    if isinstance(x, CycloNumber) and isinstance(y, CycloNumber):
        return x._mul(y)
    m = x.conductor
    if isinstance(x, CycloNumber):
        x, y = y, x
    if isinstance(y, CycloNumber):
        if not y:
            return y
        return RationalFunction(m, _pscale(x.num, y), x.den)
    return make_rational_function(m, _pmul(x.num, y.num), _pmul(x.den, y.den))


def field_inv(x):
    if isinstance(x, CycloNumber):
        return x._inv()
    return make_rational_function(x.conductor, x.den, x.num)


def field_div(x, y):
    x, y = _check_pair(x, y)
    return field_mul(x, field_inv(y))


def field_pow(x, k):
    if not isinstance(k, int):
        raise TypeError("exponent must be an integer")
    if k < 0:
        return field_pow(field_inv(x), -k)
    result = CycloNumber.from_rational(x.conductor, 1)
    base = x
    while k:
        if k & 1:
            result = field_mul(result, base)
        k >>= 1
        if k:
            base = field_mul(base, base)
    return result


def lift_conductor(x, new_conductor):
    return x.lift(new_conductor)


def root_of_unity_exponent(x):
    """Return k with x == zeta_m^k, or None when x is not an m-th root of unity."""
    if not isinstance(x, CycloNumber):
        return None
    table = _root_table(x.conductor)
    return table.get(x.coeffs)


@lru_cache(maxsize=None)
def _root_table(m):
    _, pows = _cyclo_data(m)
    return {pows[k]: k for k in range(m)}
