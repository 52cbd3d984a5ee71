"""Prime ideals above rational primes, valuations, and factoring ``(beta)``.

Splitting uses Kummer-Dedekind on ``min_poly mod p``.  That is exact only when
p does not divide the index of Z[theta] in the maximal order, so Dedekind's
criterion is checked and index primes are refused with
:class:`NonMonogenicPrime`.
"""

import math
import threading
from dataclasses import dataclass, field

from . import polymodp
from .errors import NonMonogenicPrime, NotPrime, UnitOrZero
from .intfactor import factorint, is_prime, valuation_int
from .ring import NumberRing, RingElement, elem_norm, ideal_lattice, lattice_product

INFINITY = math.inf


def factor_mod_p(poly, p, seed=polymodp.DEFAULT_SEED):
    """Monic irreducible factorization of ``poly`` over GF(p) as ``[(factor, mult)]``."""
    return polymodp.factor(poly, p, seed)[1]


@dataclass(frozen=True, eq=False)
class PrimeIdealFactor:
    """The prime ``(p, g(theta))`` of ``ring`` with ramification ``e`` and degree ``f``."""

    ring: NumberRing
    p: int
    g_poly: tuple
    e: int
    f: int
    seed: int = polymodp.DEFAULT_SEED
    _powers: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __eq__(self, other):
        return (
            isinstance(other, PrimeIdealFactor)
            and self.ring == other.ring
            and self.p == other.p
            and self.g_poly == other.g_poly
        )

    def __hash__(self):
        return hash((self.ring.min_poly, self.p, self.g_poly))

    @property
    def norm(self):
        return self.p**self.f

    def lattice(self, k):
        """HNF lattice of the k-th power of this prime (cached, k >= 0)."""
        cache = self._powers
        L = cache.get(k)
        if L is not None:
            return L
        ring = self.ring
        if k == 0:
            L = ideal_lattice(ring, [ring.one], 1)
        elif k == 1:
            L = ideal_lattice(ring, [ring(self.p), ring.from_poly(self.g_poly)], self.p)
        else:
            # square-and-multiply keeps the chain short for large k
            half = self.lattice(k // 2)
            pk = self.p**k
            L = lattice_product(ring, half, half, pk if k % 2 == 0 else None)
            if k % 2:
                L = lattice_product(ring, L, self.lattice(1), pk)
        with self._lock:
            return cache.setdefault(k, L)

    def contains(self, a, k):
        """Whether ``a`` lies in the k-th power of this prime."""
        return a.coords in self.lattice(k)

    def to_json(self, g=None):
        out = {"p": str(self.p), "g_poly": list(self.g_poly), "e": self.e, "f": self.f}
        if g is not None:
            out["g"] = g
        out["seed"] = self.seed
        return out

    def __repr__(self):
        return f"PrimeIdealFactor(p={self.p}, g_poly={list(self.g_poly)}, e={self.e}, f={self.f})"


def dedekind_ok(min_poly, p, factors):
    """Dedekind's criterion: is Z[theta] maximal at p?"""
    lifted = [1]
    rad = [1]
    for g, k in factors:
        for _ in range(k):
            lifted = _int_poly_mul(lifted, g)
        rad = polymodp.mul(rad, g, p)
    diff = [a - (lifted[i] if i < len(lifted) else 0) for i, a in enumerate(min_poly)]
    assert all(c % p == 0 for c in diff)
    F = polymodp.from_ints([c // p for c in diff], p)
    fbar = polymodp.from_ints(min_poly, p)
    h = polymodp.divmod_poly(fbar, rad, p)[0]
    return len(polymodp.gcd(polymodp.gcd(F, rad, p), h, p)) == 1


def _int_poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def factor_rational_prime(ring, p, seed=polymodp.DEFAULT_SEED):
    """Primes of ``ring`` above ``p`` (Kummer-Dedekind)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    cache_key = ("primes_above", p)
    cached = ring._lattice_cache.get(cache_key)
    if cached is not None:
        return cached
    facs = factor_mod_p(ring.min_poly, p, seed)
    if not dedekind_ok(list(ring.min_poly), p, facs):
        raise NonMonogenicPrime(f"{p} divides the index of Z[theta]; unsupported")
    out = tuple(PrimeIdealFactor(ring, p, tuple(g), k, len(g) - 1, seed) for g, k in facs)
    assert sum(P.e * P.f for P in out) == ring.degree
    return ring._lattice_cache.setdefault(cache_key, out)


def valuation(fac, a):
    """Largest k with ``a`` in the k-th power of ``fac``; ``math.inf`` for zero."""
    if not isinstance(a, RingElement):
        a = fac.ring(a)
    if not a:
        return INFINITY
    # (a) is divisible by P^k only if p^(f k) divides N(a)
    bound = valuation_int(elem_norm(a), fac.p) // fac.f
    lo, hi = 0, bound
    # membership is monotone in k: binary search
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if fac.contains(a, mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


@dataclass(frozen=True)
class BetaFactorization:
    beta: RingElement
    factors: tuple  # ((PrimeIdealFactor, g), ...)

    @property
    def norm(self):
        return math.prod(P.p ** (P.f * g) for P, g in self.factors)

    def to_json(self):
        return {
            "beta": self.beta.to_json(),
            "factors": [P.to_json(g) for P, g in self.factors],
        }


def factor_beta(ring, beta, seed=polymodp.DEFAULT_SEED):
    """Prime ideal factorization of the principal ideal ``(beta)``."""
    beta = ring(beta)
    n = abs(elem_norm(beta))
    if n <= 1:
        raise UnitOrZero(f"|N(beta)| = {n}; beta must be a nonzero non-unit")
    out = []
    for p in factorint(n):
        for P in factor_rational_prime(ring, p, seed):
            g = valuation(P, beta)
            if g > 0:
                out.append((P, g))
    bf = BetaFactorization(beta, tuple(out))
    if bf.norm != n:
        raise AssertionError(f"norm identity failed: {bf.norm} != {n}")
    return bf


def find_uniformizer(fac):
    """Deterministic element of valuation exactly 1 at ``fac``."""
    ring = fac.ring
    if fac.e == 1:
        return ring(fac.p)
    g = ring.from_poly(fac.g_poly)
    d = ring.degree
    for j in range(4 * d * fac.p + 1):
        # g(theta) + p * c for c = j written in base 2 over the power basis
        c = ring([(j >> i) & 1 for i in range(d)]) if j else ring.zero
        cand = g + c * fac.p
        if valuation(fac, cand) == 1:
            return cand
    raise AssertionError("no uniformizer found")  # excluded by Kummer-Dedekind

