import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Poly, resultant, symbols

from betadic import (
    NumberRing,
    QuotientRing,
    elem_norm,
    exact_divide,
    principal_lattice,
    quotient_reduce,
    ring_new,
)
from betadic.errors import NotDivisible, NotMonic, Reducible, RingMismatch, ZeroElement

from conftest import SHIPPED

X = symbols("x")
small = st.integers(-6, 6)


def rand_elem(ring, rng, lo=-6, hi=6):
    return ring([rng.randint(lo, hi) for _ in range(ring.degree)])


def test_ring_new_examples():
    assert ring_new([0, 1]).degree == 1
    assert ring_new([1, 0, 1]).degree == 2
    with pytest.raises(NotMonic):
        ring_new([2, 0, 2])
    with pytest.raises(ValueError):
        ring_new([1])


@pytest.mark.parametrize(
    "poly",
    [[-1, 0, 1], [4, 0, 0, 0, 1], [0, 0, 1], [-1, 0, 0, 0, 0, 0, 1], [1, 0, 2, 0, 1], [3, 4, 1, 3, 2, 1, 0, 1]],
)
def test_reducible_rejected_with_witness(poly):
    with pytest.raises(Reducible) as info:
        NumberRing(poly)
    w = info.value.factor
    assert 1 <= len(w) - 1 < len(poly) - 1
    f = Poly(list(reversed(poly)), X)
    assert f.rem(Poly(list(reversed(w)), X)).is_zero


@pytest.mark.parametrize("poly", [[1, 0, 0, 0, 1], [1, 1, 1, 1, 1], [-2, 0, 0, 0, 0, 1], [1, 1, 1, 1, 1, 1, 1], [-2] + [0] * 7 + [1]])
def test_irreducible_accepted(poly):
    NumberRing(poly)


def test_arithmetic_examples(G, R2):
    t = G.theta
    assert (1 + t) * (1 - t) == 2
    assert t * t == -1
    s = R2.theta
    assert (1 + s) ** 2 == R2([3, 2])


def test_norm_examples(G, R2):
    assert elem_norm(G([1, 1])) == 2
    assert elem_norm(G(3)) == 9
    assert elem_norm(R2([1, 1])) == -1


def test_ring_mismatch(G, R2):
    with pytest.raises(RingMismatch):
        G([1, 1]) + R2([1, 1])
    with pytest.raises(RingMismatch):
        G([1, 1]) * R2([1, 1])


@pytest.mark.parametrize("name", list(SHIPPED))
@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_norm_is_resultant_and_multiplicative(name, data):
    ring = NumberRing(SHIPPED[name])
    d = ring.degree
    a = ring(data.draw(st.lists(small, min_size=d, max_size=d)))
    b = ring(data.draw(st.lists(small, min_size=d, max_size=d)))
    assert elem_norm(a * b) == elem_norm(a) * elem_norm(b)
    f = Poly(list(reversed(ring.min_poly)), X)
    g = Poly(list(reversed(a.coords)) or [0], X)
    if a:
        assert elem_norm(a) == resultant(f, g)


def test_principal_lattice_examples(Z, G):
    assert principal_lattice(G([1, 1]), 1).determinant == 2
    L = principal_lattice(Z(3), 2)
    assert L.basis == ((9,),)
    # (1+i)^2 = 2i: columns (0, 2) and (-2, 0) have HNF diag(2, 2)
    L2 = principal_lattice(G([1, 1]), 2)
    assert L2.basis == ((2, 0), (0, 2))
    with pytest.raises(ZeroElement):
        principal_lattice(G(0), 1)


@pytest.mark.parametrize("name", list(SHIPPED))
def test_quotient_size_is_norm_power(name):
    ring = NumberRing(SHIPPED[name])
    rng = random.Random(11)
    for _ in range(40):
        b = rand_elem(ring, rng)
        n = abs(elem_norm(b))
        if n == 0:
            continue
        m = rng.randint(0, 3)
        assert principal_lattice(b, m).determinant == n**m


def test_quotient_reduce_examples(Z, G):
    q = QuotientRing(Z, principal_lattice(Z(9), 1))
    assert quotient_reduce(q, Z(256)) == Z(4)
    qg = QuotientRing(G, principal_lattice(G([1, 1]), 1))
    assert quotient_reduce(qg, G.theta) == G(1)
    assert quotient_reduce(qg, G(0)) == G(0)


@pytest.mark.parametrize("name", list(SHIPPED))
def test_reduce_idempotent_and_coset_constant(name):
    ring = NumberRing(SHIPPED[name])
    rng = random.Random(3)
    for _ in range(100):
        b = rand_elem(ring, rng)
        if not b:
            continue
        q = QuotientRing(ring, principal_lattice(b, rng.randint(1, 3)))
        a = rand_elem(ring, rng, -50, 50)
        r = q.reduce(a)
        assert q.reduce(r) == r
        # lambda = b^m * c is in the modulus
        lam = ring(q.modulus_lattice.column(rng.randrange(ring.degree))) * rand_elem(ring, rng)
        assert q.reduce(a + lam) == r


def test_exact_divide_examples(Z, G):
    assert exact_divide(G(2), G([1, 1])) == G([1, -1])
    with pytest.raises(NotDivisible):
        exact_divide(Z(256), Z(3))
    r = exact_divide(G([-1, 1]), G([1, 1]))
    assert r == G.theta and r * G([1, 1]) == G([-1, 1])
    with pytest.raises(ZeroElement):
        exact_divide(G(1), G(0))


@pytest.mark.parametrize("name", list(SHIPPED))
def test_exact_divide_inverts_multiplication(name):
    ring = NumberRing(SHIPPED[name])
    rng = random.Random(7)
    for _ in range(200):
        a, b = rand_elem(ring, rng, -20, 20), rand_elem(ring, rng)
        if not b:
            continue
        assert exact_divide(a * b, b) == a


def test_d1_matches_integers(Z):
    rng = random.Random(1)
    for _ in range(200):
        a, b = rng.randint(-10**9, 10**9), rng.randint(-10**6, 10**6)
        assert (Z(a) + Z(b)).coords == (a + b,)
        assert (Z(a) * Z(b)).coords == (a * b,)
        assert elem_norm(Z(a)) == a
        if b:
            assert principal_lattice(Z(b), 1).reduce((a,)) == (a % abs(b),)


def test_json_round_trip(G):
    data = json.loads(json.dumps(G.to_json()))
    assert data == {"min_poly": ["1", "0", "1"]}
    assert NumberRing.from_json(data) == G
    assert G([10**30, -1]).to_json() == [str(10**30), "-1"]
