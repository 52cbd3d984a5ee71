"""Local computations at a single prime ideal P above p.

Unit group sizes of O/P^k, Teichmuller representatives, the sequence
v(j) = v_P(eta^(p^j) - 1) for a principal unit eta, exact multiplicative
orders, the kernel sizes of the reduction maps <alpha mod P^r> ->
<alpha mod P^(r-1)>, and detection of their eventual periodic shape
(kernel p exactly when r - v = 1 mod e, trivial otherwise).
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (
    NotAUnit,
    NotPrincipalUnit,
    PatternNotFound,
    PrecisionExhausted,
    RootOfUnity,
    ZeroElement,
)
from .intfactor import factorint, totient
from .primes import PrimeIdealFactor, find_uniformizer, valuation
from .ring import NumberRing, QuotientRing, RingElement, elem_norm

PRECISION_CAP = 1 << 14


@dataclass(frozen=True, eq=False)
class LocalContext:
    ring: NumberRing
    prime: PrimeIdealFactor
    uniformizer: RingElement

    @property
    def p(self):
        return self.prime.p

    @property
    def e(self):
        return self.prime.e

    @property
    def f(self):
        return self.prime.f

    @property
    def residue_size(self):
        return self.prime.p**self.prime.f

    def quotient(self, k):
        return _quotient(self.prime, k)

    def valuation(self, a):
        return valuation(self.prime, a)


@lru_cache(maxsize=512)
def _quotient(prime, k):
    return QuotientRing(prime.ring, prime.lattice(k))


def local_context(prime):
    """Context at ``prime`` with a deterministically chosen uniformizer."""
    return LocalContext(prime.ring, prime, find_uniformizer(prime))


def _require_unit(ctx, a):
    if not a:
        raise NotAUnit("zero is not a unit")
    if ctx.valuation(a) != 0:
        raise NotAUnit(f"{a!r} lies in the prime above {ctx.p}")


def unit_group_size(ctx, k):
    """Order of (O/P^k)^x, namely p^(f(k-1)) (p^f - 1)."""
    if k < 1:
        raise ValueError("k must be positive")
    q = ctx.residue_size
    return q ** (k - 1) * (q - 1)


def inverse_mod(ctx, a, k):
    """Inverse of the unit ``a`` modulo P^k via Euler's theorem."""
    Q = ctx.quotient(k)
    return Q.pow(a, unit_group_size(ctx, k) - 1)


def teichmuller(ctx, a, k):
    """Teichmuller representative of the unit ``a`` modulo P^k.

    Iterates t -> t^(p^f) from ``a`` until it is stationary modulo P^k.
    """
    a = ctx.ring(a)
    _require_unit(ctx, a)
    Q = ctx.quotient(k)
    q = ctx.residue_size
    t = Q.reduce(a)
    for _ in range(k * ctx.e + 1):
        nxt = Q.pow(t, q)
        if nxt == t:
            return t
        t = nxt
    raise AssertionError("Teichmuller iteration did not converge")


def principal_part(ctx, alpha, k):
    """eta = alpha * tau(alpha)^(-1) modulo P^k, a principal unit."""
    tau = teichmuller(ctx, alpha, k)
    return ctx.quotient(k).mul(ctx.ring(alpha), inverse_mod(ctx, tau, k))


def _check_lifting(p, e, vs):
    for j in range(len(vs) - 1):
        v, w = vs[j], vs[j + 1]
        if w < min(e + v, p * v):
            raise AssertionError(f"lifting bound violated at j={j}: {vs}")
        if p * v > e + v and w != v + e:
            raise AssertionError(f"lifting equality violated at j={j}: {vs}")


def _v_sequence_at(ctx, eta_at, j_max, start):
    k = start
    while k <= PRECISION_CAP:
        Q = ctx.quotient(k)
        x = eta_at(k)
        out = []
        for _ in range(j_max + 1):
            diff = Q.reduce(x - 1)
            if not diff:
                break
            out.append(ctx.valuation(diff))
            x = Q.pow(x, ctx.p)
        else:
            _check_lifting(ctx.p, ctx.e, out)
            return out
        k *= 2
    raise PrecisionExhausted(f"v(j) reached the precision cap {PRECISION_CAP}")


def v_sequence(ctx, eta, j_max):
    """[v(0), ..., v(j_max)] with v(j) = v_P(eta^(p^j) - 1).

    ``eta`` must be congruent to 1 modulo P and not a root of unity.
    Working precision starts at e*(j_max+2) + v(0) and doubles as needed.
    """
    eta = ctx.ring(eta)
    _require_unit(ctx, eta)
    if ctx.valuation(eta - 1) < 1:
        raise NotPrincipalUnit(f"{eta!r} is not congruent to 1 modulo the prime")
    is_root, _ = is_root_of_unity(ctx.ring, eta)
    if is_root:
        raise RootOfUnity(f"{eta!r} is a root of unity")
    v0 = ctx.valuation(eta - 1)
    return _v_sequence_at(ctx, lambda k: eta, j_max, ctx.e * (j_max + 2) + v0)


def lifting_threshold(ctx, alpha, j_max=None):
    """(l, v(l)) for eta = alpha * tau(alpha)^(-1): the first j with v(j) > e.

    Beyond this index v(j+1) = v(j) + e and the kernel pattern is forced.
    """
    alpha = ctx.ring(alpha)
    _require_unit(ctx, alpha)
    is_root, _ = is_root_of_unity(ctx.ring, alpha)
    if is_root:
        raise RootOfUnity(f"{alpha!r} is a root of unity")
    e = ctx.e
    j_max = j_max or e + 2
    k = e * (j_max + 2) + 2
    while True:
        vs = _v_sequence_at(ctx, lambda kk: principal_part(ctx, alpha, kk), j_max, k)
        for j, v in enumerate(vs):
            if v > e:
                return j, v
        j_max *= 2
        k *= 2


def mult_order(ctx, alpha, k):
    """Exact multiplicative order of the unit ``alpha`` modulo P^k."""
    alpha = ctx.ring(alpha)
    _require_unit(ctx, alpha)
    Q = ctx.quotient(k)
    n = unit_group_size(ctx, k)
    fac = dict(factorint(ctx.residue_size - 1))
    if k > 1:
        fac[ctx.p] = fac.get(ctx.p, 0) + ctx.f * (k - 1)
    a = Q.reduce(alpha)
    one = Q.reduce(ctx.ring.one)
    order = n
    for q, m in fac.items():
        for _ in range(m):
            if Q.pow(a, order // q) == one:
                order //= q
            else:
                break
    return order


def kernel_size(ctx, alpha, r):
    """# ker(<alpha mod P^r> -> <alpha mod P^(r-1)>), a power of p."""
    if r < 2:
        raise ValueError("r must be at least 2")
    return mult_order(ctx, alpha, r) // mult_order(ctx, alpha, r - 1)


def kernel_sequence(ctx, alpha, r_max):
    """[(r, kernel size)] for 2 <= r <= r_max, from one pass of orders."""
    orders = [mult_order(ctx, alpha, r) for r in range(1, r_max + 1)]
    return [(r, orders[r - 1] // orders[r - 2]) for r in range(2, r_max + 1)]


def expected_kernel(p, e, v, r):
    return p if (r - v - 1) % e == 0 else 1


@dataclass(frozen=True)
class KernelPattern:
    v: int
    e: int
    p: int
    verified_up_to: int
    f: int = 1
    kernels: tuple = field(default=(), repr=False)
    lifting_index: int = None
    lifting_value: int = None

    def to_json(self, alpha=None):
        return {
            "p": str(self.p),
            "e": self.e,
            "f": self.f,
            "alpha": alpha.to_json() if alpha is not None else None,
            "kernels": [{"r": r, "size": str(s)} for r, s in self.kernels],
            "v": self.v,
            "verified_up_to": self.verified_up_to,
            "lifting_index": self.lifting_index,
            "lifting_value": self.lifting_value,
            "pattern_ok": True,
        }


def find_threshold(p, e, kernels, r_max):
    """Least v >= 1 for which the two-case formula matches every r in (v, r_max].

    At least one full period of e kernels past v is required.
    """
    sizes = dict(kernels)
    for v in range(1, r_max - e + 1):
        if all(sizes[r] == expected_kernel(p, e, v, r) for r in range(max(v + 1, 2), r_max + 1)):
            return v
    return None


def detect_pattern(ctx, alpha, r_max):
    """Find the least threshold v after which kernels follow the (1, ..., p) cycle."""
    alpha = ctx.ring(alpha)
    _require_unit(ctx, alpha)
    is_root, m = is_root_of_unity(ctx.ring, alpha)
    if is_root:
        raise RootOfUnity(f"{alpha!r} is a root of unity of order {m}", m)
    kernels = kernel_sequence(ctx, alpha, r_max)
    for r, s in kernels:
        t = s
        while t % ctx.p == 0:
            t //= ctx.p
        if t != 1:
            raise PatternNotFound(f"kernel at r={r} is {s}, not a power of {ctx.p}", kernels)
    v = find_threshold(ctx.p, ctx.e, kernels, r_max)
    if v is None:
        raise PatternNotFound(f"no threshold v below {r_max} fits the kernel sequence", kernels)
    lidx, lval = lifting_threshold(ctx, alpha)
    return KernelPattern(v, ctx.e, ctx.p, r_max, ctx.f, tuple(kernels), lidx, lval)


def kernel_report(ctx, alpha, r_max):
    """JSON-ready kernel report; ``pattern_ok`` is false when detection fails."""
    alpha = ctx.ring(alpha)
    try:
        return detect_pattern(ctx, alpha, r_max).to_json(alpha)
    except PatternNotFound as exc:
        return {
            "p": str(ctx.p),
            "e": ctx.e,
            "f": ctx.f,
            "alpha": alpha.to_json(),
            "kernels": [{"r": r, "size": str(s)} for r, s in exc.kernels],
            "v": None,
            "pattern_ok": False,
        }


@lru_cache(maxsize=64)
def _root_orders(d):
    # phi(m) >= sqrt(m/2), so phi(m) <= d forces m <= 2 d^2
    return tuple(m for m in range(1, 2 * d * d + 1) if totient(m) <= d)


def is_root_of_unity(ring, alpha):
    """(True, least m with alpha^m = 1) if alpha is a root of unity, else (False, None)."""
    alpha = ring(alpha)
    if not alpha:
        raise ZeroElement("zero is not a root of unity")
    if abs(elem_norm(alpha)) != 1:
        return False, None
    one = ring.one
    for m in _root_orders(ring.degree):
        if alpha**m == one:
            return True, m
    return False, None

