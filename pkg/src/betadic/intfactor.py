"""Rational integer factorization at desk scale.

Trial division by primes below ``TRIAL_LIMIT``, then Brent's variant of
Pollard rho driven by a fixed schedule of (start, increment) seeds, so the
result never depends on global random state.  Primality is Miller-Rabin with
the first thirteen prime bases, which is deterministic below 3.3e24; above
that bound the same bases plus ``EXTRA_BASES`` give a probable-prime answer.
"""

from functools import lru_cache
from math import gcd, isqrt

from .errors import FactoringFailed

TRIAL_LIMIT = 10**6
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_BOUND = 3317044064679887385961981
EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
RHO_SEEDS = tuple((2 + k, 1 + 2 * k) for k in range(24))
RHO_MAX_STEPS = 1 << 22


@lru_cache(maxsize=1)
def _small_primes():
    n = TRIAL_LIMIT
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i in range(n + 1) if sieve[i])


def is_prime(n):
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < _MR_DETERMINISTIC_BOUND else _MR_BASES + EXTRA_BASES
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def pollard_rho(n, seeds=RHO_SEEDS, max_steps=RHO_MAX_STEPS):
    """Return a nontrivial factor of the composite ``n`` (Brent's cycle search)."""
    if n % 2 == 0:
        return 2
    for y0, c in seeds:
        y, r, q, g = y0 % n, 1, 1, 1
        x = ys = y
        steps = 0
        while g == 1 and steps < max_steps:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += 128
            steps += r
            r *= 2
        if g == n:
            # batch overshot; step back one at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    raise FactoringFailed(f"Pollard rho found no factor of {n}")


def factorint(n):
    """Prime factorization of ``|n|`` as a dict ``{prime: exponent}``."""
    n = abs(int(n))
    if n == 0:
        raise ValueError("cannot factor 0")
    out = {}
    if n == 1:
        return out
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out[p] = k
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if is_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            r = isqrt(m)
            if r * r == m:
                stack += [r, r]
                continue
            f = pollard_rho(m)
            stack += [f, m // f]
    return dict(sorted(out.items()))


def divisors(n):
    divs = [1]
    for p, k in factorint(n).items():
        divs = [d * p**i for d in divs for i in range(k + 1)]
    return sorted(divs)


def totient(n):
    t = 1
    for p, k in factorint(n).items():
        t *= (p - 1) * p ** (k - 1)
    return t


def valuation_int(n, p):
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k
