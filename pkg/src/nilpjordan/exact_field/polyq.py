"""Dense univariate polynomials over Q.

A polynomial is a tuple of ``Fraction`` coefficients, lowest degree first,
with no trailing zeros; ``()`` is the zero polynomial.
"""

from fractions import Fraction
from functools import lru_cache


def trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(Fraction(c) for c in coeffs)


def degree(a):
    return len(a) - 1


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def neg(a):
    return tuple(-c for c in a)


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return trim(out)


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    lead = b[-1]
    db = len(b) - 1
    quot = [Fraction(0)] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if not c:
            continue
        q = c / lead
        quot[k - db] = q
        for j, y in enumerate(b):
            a[k - db + j] -= q * y
    return trim(quot), trim(a[:db])


def monic(a):
    if not a:
        return a
    lead = a[-1]
    return tuple(c / lead for c in a)


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``g = s*a + t*b`` and ``g`` monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return (), (), ()
    lead = r0[-1]
    return monic(r0), tuple(c / lead for c in s0), tuple(c / lead for c in t0)


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def euler_phi(m):
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Return the m-th cyclotomic polynomial, coefficients lowest degree first.

    Computed by dividing x^m - 1 by Phi_d for every proper divisor d of m.
    """
    if m < 1:
        raise ValueError(f"conductor must be positive, got {m}")
    poly = trim([-1] + [0] * (m - 1) + [1])
    for d in divisors(m)[:-1]:
        poly, rem = divmod_(poly, cyclotomic_polynomial(d))
        assert not rem
    return poly


def to_str(a, var="x"):
    if not a:
        return "0"
    terms = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
