"""Brute-force reference computations used by the tests.

Nothing here touches Cayley tables, masks or lattices from the library: the
group oracles multiply element objects directly and work with Python sets
of element keys; the field oracles use integer polynomials and the complex
embedding zeta_m -> exp(2 pi i / m).
"""

import cmath
import itertools
from fractions import Fraction


# integer polynomials, low degree first ----------------------------------------


def _ptrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(out)


def pexact_div(a, b):
    """a / b for an exact division of integer polynomials with monic b."""
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1]
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
    assert not any(a), "division was not exact"
    return _ptrim(q)


def mobius(n):
    result, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


def cyclotomic_by_mobius(m):
    """Phi_m = prod_{d | m} (x^d - 1)^mu(m/d), with integer coefficients."""
    num, den = [1], [1]
    for d in range(1, m + 1):
        if m % d:
            continue
        factor = [-1] + [0] * (d - 1) + [1]
        mu = mobius(m // d)
        if mu == 1:
            num = pmul(num, factor)
        elif mu == -1:
            den = pmul(den, factor)
    return pexact_div(num, den)


def totient(m):
    return sum(1 for k in range(1, m + 1) if _gcd(k, m) == 1)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


# complex embedding ------------------------------------------------------------


def embed(x, t=None):
    """Complex value of a CycloNumber, or of a rational function at t."""
    m = x.conductor
    zeta = cmath.exp(2j * cmath.pi / m)
    if hasattr(x, "coeffs"):
        return sum(float(c) * zeta**k for k, c in enumerate(x.coeffs))
    num = sum(embed(c) * t**k for k, c in enumerate(x.num))
    den = sum(embed(c) * t**k for k, c in enumerate(x.den))
    return num / den


def close(a, b, tol=1e-7):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


# groups from element objects --------------------------------------------------


class BruteGroup:
    """A finite group held as a list of element objects and a key index.

    The multiplication table is filled once from products of the element
    objects, looked up by key.
    """

    def __init__(self, elements):
        self.els = list(elements)
        self.pos = {g.key: i for i, g in enumerate(self.els)}
        self.n = len(self.els)
        self._tab = None
        self.e = next(i for i, g in enumerate(self.els) if g == g.identity())

    @classmethod
    def from_generators(cls, gens):
        gens = list(gens)
        ident = gens[0].identity()
        seen = {ident.key: ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = g * s
                    if h.key not in seen:
                        seen[h.key] = h
                        nxt.append(h)
            frontier = nxt
        return cls(seen.values())

    def mul(self, i, j):
        return self.table[i][j]

    @property
    def table(self):
        if self._tab is None:
            self._tab = [[self.pos[(a * b).key] for b in self.els] for a in self.els]
        return self._tab

    def inv(self, i):
        row = self.table[i]
        return row.index(self.e)

    def comm(self, a, b):
        t = self.table
        return t[t[t[a][b]][self.inv(a)]][self.inv(b)]

    def generated(self, seeds):
        t = self.table
        found = {self.e} | set(seeds)
        frontier = list(found)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(found):
                    for c in (t[a][b], t[b][a]):
                        if c not in found:
                            found.add(c)
                            nxt.append(c)
            frontier = nxt
        return frozenset(found)

    def center(self):
        t = self.table
        return frozenset(a for a in range(self.n) if all(t[a][b] == t[b][a] for b in range(self.n)))

    def centralizer(self, S):
        t = self.table
        return frozenset(a for a in range(self.n) if all(t[a][b] == t[b][a] for b in S))

    def commutator_subgroup(self, A=None, B=None):
        A = range(self.n) if A is None else A
        B = range(self.n) if B is None else B
        return self.generated({self.comm(a, b) for a in A for b in B})

    def is_subgroup(self, S):
        t = self.table
        return self.e in S and all(t[a][b] in S for a in S for b in S)

    def is_normal(self, S):
        t = self.table
        return all(t[t[g][s]][self.inv(g)] in S for g in range(self.n) for s in S)

    def lower_series(self):
        chain = [frozenset(range(self.n))]
        while True:
            nxt = self.commutator_subgroup(chain[-1], range(self.n))
            if nxt == chain[-1]:
                return chain
            chain.append(nxt)

    def upper_series(self):
        """Z_{i+1} = {g : [g, x] in Z_i for all x}."""
        chain = [frozenset({self.e})]
        while True:
            Z = chain[-1]
            nxt = frozenset(
                g for g in range(self.n) if all(self.comm(g, x) in Z for x in range(self.n))
            )
            if nxt == Z:
                return chain
            chain.append(nxt)

    def nilpotency_class(self):
        low = self.lower_series()
        return len(low) - 1 if len(low[-1]) == 1 else None

    def subgroups_by_subsets(self):
        """Every subgroup, by testing all subsets containing the identity."""
        others = [i for i in range(self.n) if i != self.e]
        out = []
        for r in range(len(others) + 1):
            for combo in itertools.combinations(others, r):
                S = frozenset(combo) | {self.e}
                if self.is_subgroup(S):
                    out.append(S)
        return out

    def subgroups_by_generation(self):
        """Every subgroup: cyclic subgroups closed under pairwise generation."""
        found = {self.generated([a]) for a in range(self.n)}
        while True:
            new = {self.generated(H | K) for H in found for K in found} - found
            if not new:
                return found
            found |= new

    def order_of(self, a):
        k, x = 1, a
        while x != self.e:
            x = self.table[x][a]
            k += 1
        return k

    def automorphism_count_by_bijections(self):
        """Count bijections f with f(ab) = f(a)f(b) and f(e) = e."""
        t = self.table
        others = [i for i in range(self.n) if i != self.e]
        count = 0
        for perm in itertools.permutations(others):
            f = dict(zip(others, perm))
            f[self.e] = self.e
            if all(f[t[a][b]] == t[f[a]][f[b]] for a in range(self.n) for b in range(self.n)):
                count += 1
        return count

    def automorphism_count_by_images(self, gens):
        """Count images of the generators that extend to automorphisms (brute force)."""
        t = self.table
        count = 0
        for imgs in itertools.product(range(self.n), repeat=len(gens)):
            f = {self.e: self.e}
            frontier = [self.e]
            ok = True
            while frontier and ok:
                nxt = []
                for a in frontier:
                    for g, h in zip(gens, imgs):
                        b = t[a][g]
                        v = t[f[a]][h]
                        if b in f:
                            if f[b] != v:
                                ok = False
                                break
                        else:
                            f[b] = v
                            nxt.append(b)
                    if not ok:
                        break
                frontier = nxt
            if not ok or len(set(f.values())) != self.n:
                continue
            if all(f[t[a][b]] == t[f[a]][f[b]] for a in range(self.n) for b in range(self.n)):
                count += 1
        return count

    def min_generators(self):
        if self.n == 1:
            return 0
        for k in range(1, self.n):
            for combo in itertools.combinations(range(self.n), k):
                if len(self.generated(combo)) == self.n:
                    return k
        raise AssertionError("unreachable")

    def best_abelian_index(self, subgroups):
        t = self.table
        best = max(
            len(S) for S in subgroups if all(t[a][b] == t[b][a] for a in S for b in S)
        )
        return self.n // best


def brute(G):
    """BruteGroup over the element objects of a library FiniteGroup."""
    return BruteGroup(G.elements)


def keys(G, indices):
    return frozenset(G.elements[i].key for i in indices)


def rat(x):
    return Fraction(x)
