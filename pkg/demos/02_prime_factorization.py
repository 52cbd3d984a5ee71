# Splitting of rational primes in Z[i] and factoring principal ideals.
from betadic import NumberRing, factor_beta, factor_rational_prime, valuation

G = NumberRing([1, 0, 1])

# %% 2 ramifies, 3 stays inert, 5 splits.
for p in (2, 3, 5, 13):
    above = factor_rational_prime(G, p)
    print(p, "->", [(P.g_poly, P.e, P.f) for P in above])

# %% Factor (beta) for beta = 7 + 9i, norm 130 = 2 * 5 * 13.
bf = factor_beta(G, [7, 9])
for P, g in bf.factors:
    print(f"  prime above {P.p}: e={P.e} f={P.f} exponent {g}")
print("norm check:", bf.norm)

# %% Valuations are additive.
P2 = factor_rational_prime(G, 2)[0]
x, y = G([2, 2]), G([3, 1])
print("v(x) =", valuation(P2, x), " v(y) =", valuation(P2, y), " v(xy) =", valuation(P2, x * y))

# %% Z[sqrt 5] is not maximal at 2; the factorization is refused there.
try:
    factor_rational_prime(NumberRing([-5, 0, 1]), 2)
except Exception as exc:
    print(type(exc).__name__, "-", exc)
