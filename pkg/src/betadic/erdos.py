"""The rational case K = Q: base-q digits of p^n.

Counts the exponents n <= N whose ternary expansion of 2^n avoids the digit
2, checks them against the bound M(N) <= 1.62 N^(log_3 2), and computes the
orbit-averaged digit frequencies f_{p,m}(b) over the first m digits.
"""

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .beta_adic import DEFAULT_BUDGET, digit_system, orbit_digit_stats
from .errors import BadDigit, NotPrime
from .intfactor import is_prime
from .ring import NumberRing

SIGMA = math.log(2) / math.log(3)
BOUND_CONSTANT = 1.62


def qary_digits(m, q):
    """Base-q digits of the positive integer m, lowest first."""
    if m < 1:
        raise ValueError("m must be positive")
    if q < 2:
        raise ValueError("base must be at least 2")
    # powers[k] = q^(2^k); split on the largest one for big inputs
    powers = [q]
    while powers[-1] <= m:
        powers.append(powers[-1] * powers[-1])
    out = _digits_below(m, q, powers, len(powers) - 1)
    while out[-1] == 0:
        out.pop()
    return out


def _digits_below(m, q, powers, k):
    # exactly 2^k digits of m < q^(2^k)
    if k <= 6:
        out = []
        for _ in range(1 << k):
            m, r = divmod(m, q)
            out.append(r)
        return out
    hi, lo = divmod(m, powers[k - 1])
    return _digits_below(lo, q, powers, k - 1) + _digits_below(hi, q, powers, k - 1)


def from_digits(digits, q):
    acc = 0
    for a in reversed(digits):
        acc = acc * q + a
    return acc


def narkiewicz_bound(N):
    return BOUND_CONSTANT * N**SIGMA


def double_ternary(digits):
    """Ternary digits (numpy int8, lowest first) of twice the number."""
    # carry into position i is 1 iff the nearest lower digit that is not 1 is a 2
    n = digits.size
    idx = np.where(digits != 1, np.arange(n), -1)
    last = np.maximum.accumulate(idx)
    carry_out = np.zeros(n, dtype=np.int8)
    valid = last >= 0
    carry_out[valid] = digits[last[valid]] == 2
    carry_in = np.empty(n, dtype=np.int8)
    carry_in[0] = 0
    carry_in[1:] = carry_out[:-1]
    new = (2 * digits + carry_in) % 3
    if carry_out[-1]:
        new = np.append(new, np.int8(1))
    return new.astype(np.int8)


def _scan_block(start, stop, method):
    """Exponents n in [start, stop) with 2^n free of the ternary digit 2."""
    hits = []
    if method == "incremental":
        digits = np.array(qary_digits(2**start, 3), dtype=np.int8)
        for n in range(start, stop):
            if not (digits == 2).any():
                hits.append(n)
            digits = double_ternary(digits)
    elif method == "reconvert":
        for n in range(start, stop):
            if 2 not in qary_digits(2**n, 3):
                hits.append(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return hits


@dataclass(frozen=True)
class ErdosCount:
    N: int
    hits: tuple
    M_N: int
    bound: float

    def rows(self):
        """(N', M(N'), bound(N')) for every N' <= N."""
        hits = set(self.hits)
        M = 0
        for n in range(1, self.N + 1):
            M += n in hits
            yield n, M, narkiewicz_bound(n)


def erdos_count(N, method="incremental", block=2000, workers=1):
    """Scan n = 1..N; collect n whose ternary 2^n omits the digit 2."""
    if N < 1:
        raise ValueError("N must be at least 1")
    blocks = [(s, min(s + block, N + 1), method) for s in range(1, N + 1, block)]
    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan_block, *zip(*blocks)))
    else:
        parts = [_scan_block(*b) for b in blocks]
    hits = tuple(n for part in parts for n in part)
    result = ErdosCount(N, hits, len(hits), narkiewicz_bound(N))
    for n, M, bound in result.rows():
        # one-ulp-scaled margin keeps rounding from deciding the comparison
        if M > bound * (1 + 2**-52):
            raise AssertionError(f"M({n}) = {M} exceeds {bound}")
    return result


def _check_primes(p, q):
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise NotPrime(f"p={p} and q={q} must be distinct primes")


def digit_count(n, p, q, b):
    """(d_n(b), d_n(b) / (n log_q p)): occurrences of b among the base-q digits of p^n."""
    _check_primes(p, q)
    if not 0 <= b < q:
        raise BadDigit(f"digit {b} is not in [0, {q})")
    d = qary_digits(p**n, q).count(b)
    return d, d / (n * math.log(p, q))


@dataclass(frozen=True)
class DWAverage:
    p: int
    q: int
    m: int
    l_m: int
    freq: tuple  # f_{p,m}(b) for b = 0..q-1

    def deviation(self):
        target = Fraction(1, self.q)
        return tuple(abs(f - target) for f in self.freq)


def dupuy_weirich_avg(p, q, m, budget=DEFAULT_BUDGET, progress=None):
    """Average proportion of each digit b in the first m base-q digits of p^n."""
    _check_primes(p, q)
    Z = NumberRing([0, 1])
    stats = orbit_digit_stats(digit_system(Z, q), p, m, budget, progress)
    return DWAverage(p, q, m, stats.h_m, stats.freq)


def write_erdos_csv(result, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["N", "M_N", "bound"])
    for n, M, bound in result.rows():
        w.writerow([n, M, repr(bound)])


def write_dw_csv(averages, fh):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["m", "b", "f_num", "f_den", "float"])
    for avg in averages:
        for b, f in enumerate(avg.freq):
            w.writerow([avg.m, b, f.numerator, f.denominator, repr(float(f))])
