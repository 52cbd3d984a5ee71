"""Brute-force references that avoid the code paths they check."""

from itertools import product

from betadic.errors import NotDivisible
from betadic.ring import elem_norm, exact_divide


def naive_order(Q, a):
    """Order of a in (O/L)^x by repeated multiplication."""
    one = Q.reduce(Q.ring.one)
    x = Q.reduce(a)
    for n in range(1, Q.size + 1):
        if x == one:
            return n
        x = Q.mul(x, a)
    raise AssertionError("not a unit")


def brute_unit_count(Q):
    """Number of residues whose powers return to 1 (units of a finite ring)."""
    one = Q.reduce(Q.ring.one).coords
    units = set()
    for x in Q.elements():
        if x.coords in units:
            continue
        seen = []
        seen_set = set()
        y = x
        while y.coords not in seen_set:
            if y.coords == one or y.coords in units:
                units.update(seen)
                units.add(x.coords)
                break
            seen.append(y.coords)
            seen_set.add(y.coords)
            y = Q.mul(y, x)
    return len(units)


def principal_generator(ring, prime, bound=8):
    """An element generating the prime ideal (the shipped orders are PIDs)."""
    target = prime.p**prime.f
    d = ring.degree
    for coords in product(range(-bound, bound + 1), repeat=d):
        c = ring(list(coords))
        if c and abs(elem_norm(c)) == target and prime.contains(c, 1):
            return c
    raise AssertionError("no generator found")


def valuation_by_division(pi, a):
    k = 0
    while True:
        try:
            a = exact_divide(a, pi)
        except NotDivisible:
            return k
        k += 1


def int_valuation(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def trial_division(n):
    n = abs(n)
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out
