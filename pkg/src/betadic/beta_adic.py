"""Digit expansions in base beta and digit statistics along the orbit of alpha.

For a digit system (beta, D) every x in O has a unique expansion
x = b_0 + b_1 beta + b_2 beta^2 + ... with b_i in D.  The first m digits of
x depend only on x mod beta^m, so statistics over the powers of alpha are
gathered by walking the cyclic group H_m = <alpha mod beta^m>.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IncompleteDigitSet,
    NormTooSmall,
    NotCoprime,
    RecursionInvalid,
    RootOfUnity,
    WorkBudgetExceeded,
)
from .local import is_root_of_unity, local_context, mult_order
from .primes import factor_beta, valuation
from .ring import (
    QuotientRing,
    RingElement,
    cofactor,
    elem_norm,
    principal_lattice,
)

DEFAULT_BUDGET = 10**7
PROGRESS_EVERY = 10**5


class DigitSystem:
    """A base ``beta`` with a complete residue set ``digits`` of O/beta O, 0 first."""

    def __init__(self, ring, beta, digits):
        self.ring = ring
        self.beta = beta
        self.digits = tuple(digits)
        self.norm = elem_norm(beta)
        self.radix_size = abs(self.norm)
        self.lattice = principal_lattice(beta, 1)
        self._conj = cofactor(beta)
        self._index = {self.lattice.reduce(b.coords): i for i, b in enumerate(self.digits)}

    def digit_index(self, x):
        """Index of the digit congruent to ``x`` modulo beta."""
        coords = x.coords if isinstance(x, RingElement) else x
        return self._index[self.lattice.reduce(coords)]

    def shift(self, coords, i):
        """(x - b_i) / beta on coordinate tuples."""
        b = self.digits[i].coords
        num = self.ring.mul_coords(tuple(x - y for x, y in zip(coords, b)), self._conj.coords)
        n = self.norm
        out = []
        for c in num:
            q, r = divmod(c, n)
            assert r == 0
            out.append(q)
        return tuple(out)

    def __repr__(self):
        return f"DigitSystem(beta={self.beta!r}, |D|={self.radix_size})"


def digit_system(ring, beta, digits=None):
    """Digit system for ``beta``; canonical HNF representatives unless ``digits`` is given."""
    beta = ring(beta)
    n = abs(elem_norm(beta))
    if n <= 1:
        raise NormTooSmall(f"|N(beta)| = {n} must exceed 1")
    L = principal_lattice(beta, 1)
    if digits is None:
        digits = list(QuotientRing(ring, L).elements())
    else:
        digits = [ring(b) for b in digits]
        if len(digits) != n:
            raise IncompleteDigitSet(f"need {n} digits, got {len(digits)}")
        if digits[0] != ring.zero:
            raise IncompleteDigitSet("the first digit must be 0")
        reps = {L.reduce(b.coords) for b in digits}
        if len(reps) != n:
            raise IncompleteDigitSet("digits are not pairwise incongruent modulo beta")
    return DigitSystem(ring, beta, digits)


@dataclass(frozen=True)
class Expansion:
    x: RingElement
    m: int
    digit_indices: tuple

    def digits(self, ds):
        return [ds.digits[i] for i in self.digit_indices]

    def value(self, ds):
        """sum b_i beta^i, congruent to x modulo beta^m."""
        total = ds.ring.zero
        power = ds.ring.one
        for i in self.digit_indices:
            total = total + ds.digits[i] * power
            power = power * ds.beta
        return total


def expand(ds, x, m):
    """First ``m`` digits of ``x`` in base beta (lowest first)."""
    x = ds.ring(x)
    return Expansion(x, m, _digit_indices(ds, x.coords, m))


def _digit_indices(ds, coords, m):
    out = []
    for _ in range(m):
        i = ds.digit_index(coords)
        out.append(i)
        coords = ds.shift(coords, i)
    return tuple(out)


def _factor_and_check(ds, alpha):
    alpha = ds.ring(alpha)
    bf = factor_beta(ds.ring, ds.beta)
    for P, _ in bf.factors:
        if valuation(P, alpha) > 0:
            raise NotCoprime(f"{alpha!r} is not coprime to beta (prime above {P.p})")
    return alpha, bf


def orbit_size(ds, alpha, m):
    """h_m = order of alpha in (O/beta^m O)^x, assembled prime by prime.

    The cyclic group generated by alpha only embeds in the product of the
    local groups, so its order is the lcm of the local orders.
    """
    alpha, bf = _factor_and_check(ds, alpha)
    return math.lcm(*(mult_order(local_context(P), alpha, g * m) for P, g in bf.factors))


@dataclass(frozen=True)
class OrbitDigitStats:
    m: int
    h_m: int
    counts: tuple  # D_m(b) indexed like the digit set

    @property
    def freq(self):
        total = self.m * self.h_m
        return tuple(Fraction(c, total) for c in self.counts)

    def to_json(self):
        return {
            "m": self.m,
            "h_m": str(self.h_m),
            "counts": {str(i): str(c) for i, c in enumerate(self.counts)},
            "freq": [str(f) for f in self.freq],
            "target": f"1/{len(self.counts)}",
        }


def orbit_digit_stats(ds, alpha, m, budget=DEFAULT_BUDGET, progress=None):
    """Digit counts D_m(b) over alpha^1, ..., alpha^(h_m) modulo beta^m."""
    alpha, _ = _factor_and_check(ds, alpha)
    h = orbit_size(ds, alpha, m)
    if m * h > budget:
        raise WorkBudgetExceeded(f"m*h_m = {m * h} exceeds budget {budget}", h)
    L = principal_lattice(ds.beta, m)
    mul = ds.ring.mul_coords
    a = L.reduce(alpha.coords)
    x = a
    counts = [0] * ds.radix_size
    for n in range(1, h + 1):
        for i in _digit_indices(ds, x, m):
            counts[i] += 1
        x = L.reduce(mul(x, a))
        if progress is not None and n % PROGRESS_EVERY == 0:
            progress(n, h)
    if x != a:
        raise AssertionError("orbit did not close after h_m steps")
    return OrbitDigitStats(m, h, tuple(counts))


def stats_recursive(ds, alpha, m, base_stats):
    """D_m(b) from D_M(b) by D_k = N(beta) D_(k-1) + h_(k-1).

    Valid only while h_k = N(beta) h_(k-1) for every step used.
    """
    M = base_stats.m
    if m < M:
        raise ValueError("target length is below the base length")
    N = ds.radix_size
    counts = list(base_stats.counts)
    h_prev = base_stats.h_m
    if orbit_size(ds, alpha, M) != h_prev:
        raise ValueError("base statistics do not belong to this alpha")
    for k in range(M + 1, m + 1):
        h_k = orbit_size(ds, alpha, k)
        if h_k != N * h_prev:
            raise RecursionInvalid(f"h_{k} = {h_k} differs from N(beta) h_{k - 1} = {N * h_prev}")
        counts = [N * c + h_prev for c in counts]
        h_prev = h_k
    return OrbitDigitStats(m, h_prev, tuple(counts))


def recursion_threshold(ds, alpha, m_max):
    """Least M with h_k = N(beta) h_(k-1) for all M < k <= m_max, or None."""
    hs = [orbit_size(ds, alpha, k) for k in range(1, m_max + 1)]
    N = ds.radix_size
    M = m_max
    while M > 1 and hs[M - 1] == N * hs[M - 2]:
        M -= 1
    return M if M < m_max else None


def deviation_constant(ds, base_stats):
    """C with f_m(b) - 1/|D| = (D_M(b)/h_M - M/N) / m once the recursion holds.

    Returns the exact maximum over digits of |D_M(b)/h_M - M/N|.
    """
    N = ds.radix_size
    M, h = base_stats.m, base_stats.h_m
    return max(abs(Fraction(c, h) - Fraction(M, N)) for c in base_stats.counts)


@dataclass(frozen=True)
class BlockComplexity:
    rows: tuple  # ((m, C_m, slope_m), ...)
    numerator: dict  # {p: coefficient of log p}
    denominator: dict
    radix_size: int

    @property
    def limit(self):
        num = sum(float(c) * math.log(p) for p, c in self.numerator.items())
        den = sum(float(c) * math.log(p) for p, c in self.denominator.items())
        return num / den

    @property
    def limit_exact(self):
        """The limit as a Fraction when the two log combinations are proportional."""
        primes = set(self.numerator) | set(self.denominator)
        ratios = {Fraction(self.numerator.get(p, 0)) / self.denominator[p] for p in primes if self.denominator.get(p)}
        if len(ratios) == 1 and set(self.numerator) <= set(self.denominator):
            return ratios.pop()
        return None

    def to_json(self):
        exact = self.limit_exact
        return {
            "rows": [{"m": m, "C_m": str(c), "slope": f"{s:.12f}"} for m, c, s in self.rows],
            "limit": f"{self.limit:.12f}",
            "limit_exact": None if exact is None else str(exact),
            "limit_numerator": {str(p): str(c) for p, c in self.numerator.items()},
            "limit_denominator": {str(p): str(c) for p, c in self.denominator.items()},
        }


def complexity_limit(bf):
    """Coefficients of log p in the limit of log h_m / m and in log N(beta).

    The p-part of h_m grows like p^(m g/e) at each prime above p and the lcm
    keeps the largest, so the numerator takes max g/e over the primes above p
    (the plain sum of g/e log p when beta has one prime factor above each p).
    """
    num, den = {}, {}
    for P, g in bf.factors:
        num[P.p] = max(num.get(P.p, Fraction(0)), Fraction(g, P.e))
        den[P.p] = den.get(P.p, 0) + g * P.f
    return num, den


def block_complexity(ds, alpha, m_max, ms=None):
    """C_m = h_m with slope log C_m / (m log N(beta)) and the limiting slope."""
    alpha, bf = _factor_and_check(ds, alpha)
    is_root, order = is_root_of_unity(ds.ring, alpha)
    if is_root:
        raise RootOfUnity(f"{alpha!r} is a root of unity of order {order}", order)
    ctxs = [(local_context(P), g) for P, g in bf.factors]
    logN = math.log(ds.radix_size)
    rows = []
    for m in ms or range(1, m_max + 1):
        c = math.lcm(*(mult_order(ctx, alpha, g * m) for ctx, g in ctxs))
        rows.append((m, c, math.log(c) / (m * logN)))
    num, den = complexity_limit(bf)
    return BlockComplexity(tuple(rows), num, den, ds.radix_size)


def count_blocks(ds, alpha, m, budget=DEFAULT_BUDGET):
    """Distinct m-digit blocks among the expansions of alpha^n, counted directly."""
    alpha, _ = _factor_and_check(ds, alpha)
    L = principal_lattice(ds.beta, m)
    a = L.reduce(alpha.coords)
    x = a
    seen = set()
    for _ in range(budget):
        seen.add(_digit_indices(ds, x, m))
        x = L.reduce(ds.ring.mul_coords(x, a))
        if x == a:
            return len(seen)
    raise WorkBudgetExceeded("orbit longer than budget")
