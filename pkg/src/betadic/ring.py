"""Exact arithmetic in a monogenic order Z[theta] and its finite quotients.

The order is fixed by a monic irreducible polynomial and is *assumed* to be
the full ring of integers of the field it defines; no integral basis is ever
computed.  Elements are integer coordinate vectors in the power basis
``1, theta, ..., theta^(d-1)``.
"""

import json
from fractions import Fraction
from itertools import product
from math import isqrt

from . import polymodp
from .errors import (
    NotDivisible,
    NotMonic,
    Reducible,
    RingMismatch,
    ZeroElement,
)
from .intfactor import divisors, is_prime
from .lattice import IntegerLattice

# primes tried when looking for a degree-pattern proof of irreducibility
_PATTERN_PRIMES = tuple(p for p in range(2, 400) if is_prime(p))


def poly_eval(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _find_factor(coeffs):
    """Return a nontrivial monic factor of a monic integer polynomial, or None.

    Rational roots for any degree; for degree 4 also a product of two
    integer quadratics.  Anything else is left to the caller.
    """
    d = len(coeffs) - 1
    c0 = coeffs[0]
    if c0 == 0:
        return [0, 1]
    for r in divisors(c0):
        for s in (r, -r):
            if poly_eval(coeffs, s) == 0:
                return [-s, 1]
    if d == 4:
        a1, a2, a3 = coeffs[1], coeffs[2], coeffs[3]
        for q0 in divisors(c0):
            for q in (q0, -q0):
                s = c0 // q
                # (x^2 + u x + q)(x^2 + w x + s): u + w = a3, uw = a2 - q - s
                disc = a3 * a3 - 4 * (a2 - q - s)
                if disc < 0:
                    continue
                t = isqrt(disc)
                if t * t != disc or (a3 + t) % 2:
                    continue
                u = (a3 + t) // 2
                for u, w in ((u, a3 - u), (a3 - u, u)):
                    if u * s + w * q == a1:
                        return [q, u, 1]
    return None


def check_irreducible(coeffs):
    """Raise :class:`Reducible` unless ``coeffs`` is irreducible over Q."""
    d = len(coeffs) - 1
    if d == 1:
        return
    witness = _find_factor(coeffs)
    if witness is not None:
        raise Reducible(f"polynomial {coeffs} has factor {witness}", witness)
    if d <= 3:
        return
    # degree patterns: a factor of degree k over Q needs a sub-multiset of every
    # mod-p factor pattern summing to k
    possible = set(range(1, d))
    for p in _PATTERN_PRIMES:
        _, facs = polymodp.factor(coeffs, p)
        if any(k > 1 for _, k in facs):
            continue
        degs = [len(g) - 1 for g, _ in facs]
        sums = {0}
        for x in degs:
            sums |= {s + x for s in sums}
        possible &= sums
        if not possible:
            return
    if d == 4:
        return
    import sympy

    x = sympy.Symbol("x")
    _, flist = sympy.factor_list(sum(c * x**i for i, c in enumerate(coeffs)), x)
    if len(flist) > 1 or flist[0][1] > 1:
        g = sympy.Poly(flist[0][0], x).all_coeffs()[::-1]
        raise Reducible(f"polynomial {coeffs} has factor {g}", [int(c) for c in g])


class NumberRing:
    """The order Z[theta] for a monic irreducible ``min_poly``.

    ``min_poly`` lists coefficients from the constant term upward.
    ``assume_maximal`` records that Z[theta] is treated as the ring of
    integers; it is informational and always true in this package.
    """

    def __init__(self, min_poly, assume_maximal=True, check=True):
        coeffs = tuple(int(c) for c in min_poly)
        if len(coeffs) < 2:
            raise ValueError("min_poly must have degree at least 1")
        if coeffs[-1] != 1:
            raise NotMonic(f"leading coefficient is {coeffs[-1]}, expected 1")
        if check:
            check_irreducible(list(coeffs))
        self.min_poly = coeffs
        self.degree = len(coeffs) - 1
        self.assume_maximal = assume_maximal
        self._lattice_cache = {}

    def __eq__(self, other):
        return isinstance(other, NumberRing) and self.min_poly == other.min_poly

    def __hash__(self):
        return hash(self.min_poly)

    def __repr__(self):
        return f"NumberRing({list(self.min_poly)})"

    def __call__(self, coords):
        """Build an element from an int or a coordinate sequence."""
        if isinstance(coords, RingElement):
            if coords.ring != self:
                raise RingMismatch("element belongs to another ring")
            return coords
        if isinstance(coords, int):
            return RingElement(self, (coords,) + (0,) * (self.degree - 1))
        coords = tuple(int(c) for c in coords)
        if len(coords) > self.degree:
            raise ValueError(f"expected at most {self.degree} coordinates")
        return RingElement(self, coords + (0,) * (self.degree - len(coords)))

    def from_poly(self, coeffs):
        """Evaluate an integer polynomial at theta."""
        coeffs = [int(c) for c in coeffs]
        d = self.degree
        f = self.min_poly
        for i in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[i]
            if c:
                for j in range(d + 1):
                    coeffs[i - d + j] -= c * f[j]
        coeffs = coeffs[:d]
        return RingElement(self, tuple(coeffs) + (0,) * (d - len(coeffs)))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    @property
    def theta(self):
        return self([0, 1]) if self.degree > 1 else self(-self.min_poly[0])

    def mul_coords(self, a, b):
        """Product of coordinate tuples reduced modulo min_poly."""
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        prod_ = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod_[i + j] += x * y
        f = self.min_poly
        for i in range(2 * d - 2, d - 1, -1):
            c = prod_[i]
            if c:
                for j in range(d):
                    prod_[i - d + j] -= c * f[j]
        return tuple(prod_[:d])

    def mult_matrix(self, a):
        """Matrix (list of rows) of multiplication by ``a`` in the power basis."""
        a = self(a)
        d = self.degree
        cols = []
        v = a.coords
        theta = self.theta.coords
        for _ in range(d):
            cols.append(v)
            v = self.mul_coords(v, theta)
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def to_json(self):
        return {"min_poly": [str(c) for c in self.min_poly]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls([int(c) for c in data["min_poly"]])


class RingElement:
    __slots__ = ("ring", "coords")

    def __init__(self, ring, coords):
        self.ring = ring
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatch("elements belong to different rings")
            return other
        if isinstance(other, int):
            return self.ring(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, tuple(x + y for x, y in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return -self + other

    def __neg__(self):
        return RingElement(self.ring, tuple(-x for x in self.coords))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.ring.mul_coords(self.coords, other.coords))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not ring elements")
        result = self.ring.one.coords
        base = self.coords
        mul = self.ring.mul_coords
        while n:
            if n & 1:
                result = mul(result, base)
            n >>= 1
            if n:
                base = mul(base, base)
        return RingElement(self.ring, result)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring(other)
        return isinstance(other, RingElement) and self.ring == other.ring and self.coords == other.coords

    def __hash__(self):
        return hash((self.ring.min_poly, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"RingElement({list(self.coords)})"

    def norm(self):
        return elem_norm(self)

    def to_json(self):
        return [str(c) for c in self.coords]


def elem_add(a, b):
    return a + b


def elem_sub(a, b):
    return a - b


def elem_mul(a, b):
    return a * b


def det(matrix):
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    m = [list(row) for row in matrix]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def elem_norm(a):
    """Field norm of ``a``: the determinant of multiplication by ``a``.

    For monic min_poly this equals the resultant of min_poly and the
    polynomial of ``a``; its absolute value is ``#(O / aO)``.
    """
    return det(a.ring.mult_matrix(a))


def cofactor(a):
    """The element ``N(a)/a`` of the order (first column of the adjugate)."""
    ring = a.ring
    n = elem_norm(a)
    if n == 0:
        raise ZeroElement("zero element has no cofactor")
    d = ring.degree
    m = [[Fraction(x) for x in row] + [Fraction(int(i == 0))] for i, row in enumerate(ring.mult_matrix(a))]
    # solve M c = n * e_0 by Gauss-Jordan over Q
    for k in range(d):
        piv = next(i for i in range(k, d) if m[i][k] != 0)
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(d):
            if i != k and m[i][k]:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    coords = [m[i][d] * n for i in range(d)]
    assert all(c.denominator == 1 for c in coords)
    return ring([int(c) for c in coords])


def exact_divide(a, b, conj=None, norm=None):
    """Return ``c`` with ``c*b == a``; raise :class:`NotDivisible` if ``a`` is not in ``(b)``.

    ``conj``/``norm`` may carry a precomputed ``cofactor(b)`` and ``N(b)``.
    """
    if a.ring != b.ring:
        raise RingMismatch("elements belong to different rings")
    if norm is None:
        norm = elem_norm(b)
    if norm == 0:
        raise ZeroElement("division by zero")
    if conj is None:
        conj = cofactor(b)
    num = a.ring.mul_coords(a.coords, conj.coords)
    out = []
    for c in num:
        q, r = divmod(c, norm)
        if r:
            raise NotDivisible(f"{a!r} is not divisible by {b!r}")
        out.append(q)
    return RingElement(a.ring, tuple(out))


def ideal_lattice(ring, generators, modulus):
    """HNF lattice of the ideal generated by ``generators``.

    ``modulus`` is a positive integer known to lie in the ideal.
    """
    d = ring.degree
    theta = ring.theta.coords
    gens = []
    for g in generators:
        v = ring(g).coords
        for _ in range(d):
            gens.append(v)
            v = ring.mul_coords(v, theta)
    return IntegerLattice.from_generators(gens, d, modulus)


def lattice_product(ring, L1, L2, modulus=None):
    """Lattice of the product of the ideals ``L1`` and ``L2``.

    ``modulus`` defaults to the product of the determinants, which always lies
    in the product ideal.
    """
    d = ring.degree
    c1 = [L1.column(j) for j in range(d)]
    c2 = [L2.column(j) for j in range(d)]
    gens = [ring.mul_coords(x, y) for x in c1 for y in c2]
    return IntegerLattice.from_generators(gens, d, modulus or L1.determinant * L2.determinant)


def principal_lattice(b, m=1):
    """HNF lattice of the ideal ``(b)^m``; determinant ``|N(b)|^m``."""
    ring = b.ring
    key = ("principal", b.coords, m)
    cached = ring._lattice_cache.get(key)
    if cached is not None:
        return cached
    n = abs(elem_norm(b))
    if n == 0:
        raise ZeroElement("principal lattice of zero")
    L = ideal_lattice(ring, [b**m], n**m)
    ring._lattice_cache.setdefault(key, L)
    return L


class QuotientRing:
    """The finite ring O / L for an ideal lattice L."""

    def __init__(self, ring, modulus_lattice):
        self.ring = ring
        self.modulus_lattice = modulus_lattice
        self.size = modulus_lattice.determinant

    def reduce(self, a):
        if isinstance(a, RingElement):
            if a.ring != self.ring:
                raise RingMismatch("element belongs to another ring")
            a = a.coords
        return RingElement(self.ring, self.modulus_lattice.reduce(a))

    def mul(self, a, b):
        return self.reduce(self.ring.mul_coords(a.coords, b.coords))

    def pow(self, a, n):
        L = self.modulus_lattice
        mul = self.ring.mul_coords
        result = L.reduce(self.ring.one.coords)
        base = L.reduce(a.coords)
        while n:
            if n & 1:
                result = L.reduce(mul(result, base))
            n >>= 1
            if n:
                base = L.reduce(mul(base, base))
        return RingElement(self.ring, result)

    def is_zero(self, a):
        return a.coords in self.modulus_lattice if isinstance(a, RingElement) else a in self.modulus_lattice

    def elements(self):
        """Every canonical representative, in lexicographic coordinate order."""
        for coords in product(*(range(n) for n in self.modulus_lattice.diagonal)):
            yield RingElement(self.ring, coords)


def quotient_reduce(q, a):
    return q.reduce(a)


def ring_new(min_poly):
    return NumberRing(min_poly)
