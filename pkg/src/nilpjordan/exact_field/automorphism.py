"""Moebius automorphisms t -> (a t + b)/(c t + d) of Q(zeta_m)(t).

They fix Q(zeta_m) pointwise, so in particular every root of unity.
"""

from ..errors import ConductorMismatch, DivisionByZero, OrderExceedsCap
from .scalars import (
    CycloNumber,
    RationalFunction,
    _padd,
    _pmul,
    make_rational_function,
)


class FieldAutomorphism:
    __slots__ = ("conductor", "mobius", "_hash")

    def __init__(self, conductor, a, b, c, d):
        entries = []
        for x in (a, b, c, d):
            if not isinstance(x, CycloNumber):
                if isinstance(x, RationalFunction):
                    raise ConductorMismatch("Moebius entries must be constants")
                x = CycloNumber.from_rational(conductor, x)
            if x.conductor != conductor:
                raise ConductorMismatch(
                    f"Moebius entry has conductor {x.conductor}, expected {conductor}"
                )
            entries.append(x)
        a, b, c, d = entries
        if not (a * d - b * c):
            raise DivisionByZero("singular Moebius matrix (ad - bc = 0)")
        lead = next(x for x in entries if x)
        if not lead.is_one():
            inv = lead._inv()
            entries = [x * inv for x in entries]
        self.conductor = conductor
        self.mobius = tuple(entries)
        self._hash = None

    @classmethod
    def identity(cls, conductor):
        return cls(conductor, 1, 0, 0, 1)

    @classmethod
    def scaling(cls, conductor, factor):
        """t -> factor * t"""
        return cls(conductor, factor, 0, 0, 1)

    @classmethod
    def inversion(cls, conductor):
        """t -> 1/t"""
        return cls(conductor, 0, 1, 1, 0)

    def is_identity(self):
        a, b, c, d = self.mobius
        return a.is_one() and not b and not c and d.is_one()

    def __eq__(self, other):
        if not isinstance(other, FieldAutomorphism):
            return NotImplemented
        return self.conductor == other.conductor and self.mobius == other.mobius

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.conductor, self.mobius))
        return self._hash

    def __call__(self, x):
        return apply_automorphism(self, x)

    def __mul__(self, other):
        return compose_automorphisms(self, other)

    @property
    def key(self):
        return "[" + ", ".join(str(x) for x in self.mobius) + "]"

    def __repr__(self):
        return f"FieldAutomorphism({self.conductor}, {self.key})"

    def lift(self, new_conductor):
        return FieldAutomorphism(new_conductor, *(x.lift(new_conductor) for x in self.mobius))


def _substitute(poly, a, b, c, d, total):
    """sum p_i (a t + b)^i (c t + d)^(total - i)"""
    lin_num = (b, a)
    lin_den = (d, c)
    acc = ()
    for i, coeff in enumerate(poly):
        if not coeff:
            continue
        term = (coeff,)
        for _ in range(i):
            term = _pmul(term, lin_num)
        for _ in range(total - i):
            term = _pmul(term, lin_den)
        acc = _padd(acc, term)
    return acc


def apply_automorphism(sigma, x):
    """Substitute t -> (a t + b)/(c t + d) in x; constants are returned as is."""
    if x.conductor != sigma.conductor:
        raise ConductorMismatch(
            f"automorphism conductor {sigma.conductor} vs scalar conductor {x.conductor}"
        )
    if isinstance(x, CycloNumber) or sigma.is_identity():
        return x
    a, b, c, d = sigma.mobius
    total = max(len(x.num), len(x.den)) - 1
    num = _substitute(x.num, a, b, c, d, total)
    den = _substitute(x.den, a, b, c, d, total)
    return make_rational_function(x.conductor, num, den)


def compose_automorphisms(sigma, tau):
    """The automorphism x -> sigma(tau(x))."""
    if sigma.conductor != tau.conductor:
        raise ConductorMismatch("automorphisms over different conductors")
    # sigma(tau(f))(t) = f(M_tau . (M_sigma . t)), so the matrix is M_tau M_sigma
    a1, b1, c1, d1 = tau.mobius
    a2, b2, c2, d2 = sigma.mobius
    return FieldAutomorphism(
        sigma.conductor,
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
    )


def automorphism_order(sigma, cap=1000):
    power = sigma
    for k in range(1, cap + 1):
        if power.is_identity():
            return k
        power = compose_automorphisms(power, sigma)
    raise OrderExceedsCap(f"automorphism order exceeds {cap}")
