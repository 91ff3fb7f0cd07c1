"""Central series, nilpotency class and the class-two toolkit."""

from dataclasses import dataclass

import numpy as np

from .errors import CertificationFailure, NotClassTwo, NotPrime, PrimeDoesNotDivideOrder
from .group_core import (
    GroupHom,
    as_group,
    center,
    commutator_subgroup,
    is_normal,
    join,
    preimage,
    quotient,
    subgroup_generated,
    trivial_subgroup,
    whole_group,
)
from .group_core.finite_group import commutator_array


@dataclass
class CentralSeries:
    direction: str  # "ascending" or "descending"
    chain: list
    terminated: bool

    @property
    def orders(self):
        return [H.order for H in self.chain]

    @property
    def length(self):
        return len(self.chain) - 1


def upper_central_series(G):
    """1 = Z_0 <= Z_1 <= ... with Z_{i+1} the preimage of Z(G/Z_i).

    The chain lists distinct terms only; it stops once a term repeats.
    """
    chain = [trivial_subgroup(G)]
    while True:
        Q, proj = quotient(G, chain[-1])
        nxt = preimage(proj, center(Q))
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return CentralSeries("ascending", chain, chain[-1].order == G.order)


def lower_central_series(G):
    """G = gamma_0 >= gamma_1 >= ... with gamma_{i+1} = [gamma_i, G]."""
    full = whole_group(G)
    chain = [full]
    while True:
        nxt = commutator_subgroup(G, chain[-1], full)
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return CentralSeries("descending", chain, chain[-1].order == 1)


def nilpotency_class(G):
    """The nilpotency class, or None when G is not nilpotent.

    Cross-checks the lower series length against the upper one.
    """
    lower = lower_central_series(G)
    upper = upper_central_series(G)
    if lower.terminated != upper.terminated or (
        lower.terminated and lower.length != upper.length
    ):
        raise CertificationFailure("upper and lower central series disagree")
    return lower.length if lower.terminated else None


def derived_subgroup(G):
    return commutator_subgroup(G)


def is_class_at_most_two(G):
    """G' is contained in Z(G)."""
    return derived_subgroup(G) <= center(G)


def commutator_map(G, g):
    """x -> [x, g] as a homomorphism from G onto (a subgroup of) G'.

    The codomain is G' as a group in its own right (``as_group``).
    """
    g = G.check_index(g)
    if not is_class_at_most_two(G):
        raise NotClassTwo("x -> [x, g] is only a homomorphism in class at most two")
    D = derived_subgroup(G)
    Dg = as_group(D, name="G'")
    comms = commutator_array(G, np.arange(G.order), [g])[:, 0]
    return GroupHom(G, Dg, Dg._position[comms])


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def sylow_subgroup(G, p):
    """A maximal p-subgroup, grown by adjoining p-elements while the result
    stays a p-group."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if G.order % p:
        raise PrimeDoesNotDivideOrder(f"{p} does not divide {G.order}")
    orders = G.element_orders
    p_elements = [x for x in range(G.order) if _is_p_power(int(orders[x]), p)]
    P = trivial_subgroup(G)
    grown = True
    while grown:
        grown = False
        for x in p_elements:
            if x in P:
                continue
            K = join(P, subgroup_generated(G, [x]))
            if _is_p_power(K.order, p):
                P = K
                grown = True
    return P


def sylow_subgroups(G):
    return {p: sylow_subgroup(G, p) for p in _prime_factors(G.order)}


def is_nilpotent_via_sylow(G):
    """A finite group is nilpotent iff every Sylow subgroup is normal."""
    return all(is_normal(G, P) for P in sylow_subgroups(G).values())


def describe_series(series):
    return {
        "direction": series.direction,
        "orders": series.orders,
        "terminated": series.terminated,
    }
