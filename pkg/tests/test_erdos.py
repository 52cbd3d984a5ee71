import io
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betadic import digit_count, dupuy_weirich_avg, erdos_count, qary_digits
from betadic.erdos import (
    double_ternary,
    from_digits,
    narkiewicz_bound,
    write_dw_csv,
    write_erdos_csv,
)
from betadic.errors import BadDigit, NotPrime


def naive_digits(m, q):
    out = []
    while m:
        m, r = divmod(m, q)
        out.append(r)
    return out


def test_qary_examples():
    assert qary_digits(1, 3) == [1]
    assert qary_digits(4, 3) == [1, 1]
    assert qary_digits(256, 3) == [1, 1, 1, 0, 0, 1]
    assert qary_digits(32, 3) == [2, 1, 0, 1]
    with pytest.raises(ValueError):
        qary_digits(0, 3)
    with pytest.raises(ValueError):
        qary_digits(5, 1)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 10**400), st.integers(2, 40))
def test_qary_matches_repeated_division(m, q):
    digits = qary_digits(m, q)
    assert digits == naive_digits(m, q)
    assert from_digits(digits, q) == m


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 10**200))
def test_double_ternary(m):
    d = np.array(qary_digits(m, 3), dtype=np.int8)
    assert double_ternary(d).tolist() == qary_digits(2 * m, 3)


def test_erdos_small():
    assert erdos_count(1).hits == ()
    res = erdos_count(10)
    assert res.hits == (2, 8) and res.M_N == 2
    rows = list(res.rows())
    assert rows[0] == (1, 0, narkiewicz_bound(1)) and rows[-1][1] == 2
    with pytest.raises(ValueError):
        erdos_count(0)


def test_incremental_and_reconversion_agree():
    a = erdos_count(3000, method="incremental", block=700)
    b = erdos_count(3000, method="reconvert")
    assert a.hits == b.hits == (2, 8)


def test_parallel_blocks_agree():
    assert erdos_count(2000, block=500, workers=2).hits == (2, 8)


def test_bound_values():
    assert narkiewicz_bound(1) == 1.62
    assert abs(narkiewicz_bound(3**5) - 1.62 * 2**5) < 1e-9


def test_digit_count():
    # 2^8 = 100111 in base 3 (highest first): digits 1,1,1,0,0,1 lowest first
    d, ratio = digit_count(8, 2, 3, 1)
    assert d == 4
    assert ratio == pytest.approx(4 / (8 * math.log(2, 3)))
    assert digit_count(8, 2, 3, 2)[0] == 0
    with pytest.raises(BadDigit):
        digit_count(8, 2, 3, 3)
    with pytest.raises(NotPrime):
        digit_count(8, 4, 3, 1)
    with pytest.raises(NotPrime):
        digit_count(8, 3, 3, 1)


def test_dw_averages_by_enumeration():
    # average over n = 1..l_m of the digit proportions in the first m digits of 2^n
    for m in (1, 2, 3, 4):
        avg = dupuy_weirich_avg(2, 3, m)
        assert avg.l_m == 2 * 3 ** (m - 1)
        counts = [0, 0, 0]
        for n in range(1, avg.l_m + 1):
            ds = qary_digits(pow(2, n, 3**m) + 3**m, 3)[:m]
            for b in ds:
                counts[b] += 1
        assert avg.freq == tuple(Fraction(c, m * avg.l_m) for c in counts)
        assert max(avg.deviation()) <= Fraction(1, m)


def test_dw_other_primes():
    avg = dupuy_weirich_avg(3, 5, 3)
    assert sum(avg.freq) == 1
    assert len(avg.freq) == 5
    with pytest.raises(NotPrime):
        dupuy_weirich_avg(2, 9, 2)


def test_csv_writers():
    buf = io.StringIO()
    write_erdos_csv(erdos_count(9), buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "N,M_N,bound"
    assert len(lines) == 10
    assert lines[2].startswith("2,1,")
    buf = io.StringIO()
    write_dw_csv([dupuy_weirich_avg(2, 3, 2)], buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "m,b,f_num,f_den,float"
    assert lines[1:] == ["2,0,1,6,0.16666666666666666", "2,1,5,12,0.4166666666666667", "2,2,5,12,0.4166666666666667"]
