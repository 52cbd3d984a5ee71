"""Polynomials over GF(p) and their factorization.

A polynomial is a list of coefficients in ``[0, p)``, constant term first,
with no trailing zeros; ``[]`` is the zero polynomial.  Factorization runs
squarefree decomposition, distinct-degree splitting and equal-degree
splitting.  Equal-degree splitting is deterministic for p = 2 (trace map over
the monomial basis) and uses ``random.Random(seed)`` otherwise.
"""

import random

from .errors import NotPrime
from .intfactor import is_prime

DEFAULT_SEED = 20240601


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def from_ints(coeffs, p):
    return trim([c % p for c in coeffs])


def deg(a):
    return len(a) - 1


def add(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def sub(a, b, p):
    n = max(len(a), len(b))
    return trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def divmod_poly(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    if len(a) <= db:
        return [], trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return trim(q), trim(a[:db])


def mod(a, b, p):
    return divmod_poly(a, b, p)[1]


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def gcd(a, b, p):
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def powmod(a, e, f, p):
    result = [1]
    base = mod(a, f, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), f, p)
        e >>= 1
        if e:
            base = mod(mul(base, base, p), f, p)
    return result


def derivative(a, p):
    return trim([i * a[i] % p for i in range(1, len(a))])


def pth_root(a, p):
    # valid only when every exponent with nonzero coefficient is divisible by p
    return trim([a[i] for i in range(0, len(a), p)])


def squarefree_decomposition(f, p):
    """Return ``[(g, k), ...]`` with f = prod g**k, each g squarefree and monic."""
    f = monic(f, p)
    if len(f) <= 1:
        return []
    df = derivative(f, p)
    if not df:
        return [(g, k * p) for g, k in squarefree_decomposition(pth_root(f, p), p)]
    out = []
    c = gcd(f, df, p)
    w = divmod_poly(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = gcd(w, c, p)
        z = divmod_poly(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        i += 1
        w = y
        c = divmod_poly(c, y, p)[0]
    if len(c) > 1:
        out += [(g, k * p) for g, k in squarefree_decomposition(pth_root(c, p), p)]
    return out


def distinct_degree(f, p):
    """Split a monic squarefree ``f`` into ``[(product of degree-r factors, r)]``."""
    out = []
    x = [0, 1]
    h = x
    r = 0
    while len(f) - 1 >= 2 * (r + 1):
        r += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, r))
            f = divmod_poly(f, g, p)[0]
            h = mod(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _trace(a, r, f, p):
    t = []
    s = mod(a, f, p)
    for _ in range(r):
        t = add(t, s, p)
        s = powmod(s, p, f, p)
    return t


def equal_degree(f, r, p, rng=None):
    """Split a monic squarefree ``f`` whose irreducible factors all have degree r."""
    n = len(f) - 1
    if n == r:
        return [f]
    if n == 0:
        return []
    if p == 2:
        for j in range(n):
            a = [0] * j + [1]
            g = gcd(f, _trace(a, r, f, p), p)
            if 0 < len(g) - 1 < n:
                break
        else:
            raise AssertionError("trace splitting failed")
    else:
        if rng is None:
            rng = random.Random(DEFAULT_SEED)
        e = (p**r - 1) // 2
        while True:
            a = trim([rng.randrange(p) for _ in range(n)])
            if len(a) < 2:
                continue
            g = gcd(f, a, p)
            if 0 < len(g) - 1 < n:
                break
            b = sub(powmod(a, e, f, p), [1], p)
            g = gcd(f, b, p)
            if 0 < len(g) - 1 < n:
                break
    h = divmod_poly(f, g, p)[0]
    return equal_degree(g, r, p, rng) + equal_degree(h, r, p, rng)


def factor(poly, p, seed=DEFAULT_SEED):
    """Factor ``poly`` over GF(p) into monic irreducibles.

    Returns ``(lead, [(factor, multiplicity), ...])`` with factors sorted by
    degree and then coefficients.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    f = from_ints(poly, p)
    if not f:
        raise ValueError("polynomial vanishes modulo p")
    lead = f[-1]
    rng = random.Random(seed)
    out = []
    for g, k in squarefree_decomposition(f, p):
        for h, r in distinct_degree(g, p):
            for q in equal_degree(h, r, p, rng):
                out.append((q, k))
    out.sort(key=lambda t: (len(t[0]), t[0][::-1], t[1]))
    return lead, out


def is_irreducible(poly, p):
    f = from_ints(poly, p)
    n = len(f) - 1
    if n < 1:
        return False
    f = monic(f, p)
    if n == 1:
        return True
    _, facs = factor(f, p)
    return len(facs) == 1 and facs[0][1] == 1
