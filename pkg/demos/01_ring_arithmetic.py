# Arithmetic in Z[i] and Z[sqrt 2]: elements, norms, exact division, quotients.
from betadic import NumberRing, QuotientRing, elem_norm, exact_divide, principal_lattice

# %% A ring is given by its monic defining polynomial, constant term first.
G = NumberRing([1, 0, 1])       # x^2 + 1, so theta = i
i = G.theta
a = G([3, 2])                   # 3 + 2i
b = G([1, 1])                   # 1 + i
print("a*b =", (a * b).coords)  # (1, 5): (3+2i)(1+i) = 1 + 5i
print("N(a) =", elem_norm(a), " N(b) =", elem_norm(b))
print("i^2 =", (i * i).coords)

# %% Division is exact or raises NotDivisible.
print("(1+5i)/(1+i) =", exact_divide(a * b, b).coords)

# %% The ideal (1+i)^3 as an integer lattice in Hermite normal form.
L = principal_lattice(b, 3)
print("HNF rows:", L.basis, " index:", L.determinant)   # index 8 = N(1+i)^3

# %% The finite ring Z[i]/(1+i)^3 has 8 canonical residues.
Q = QuotientRing(G, L)
print("residues:", [x.coords for x in Q.elements()])

# %% Same operations in Z[sqrt 2]; 1 + sqrt2 is a unit of norm -1.
R2 = NumberRing([-2, 0, 1])
u = R2([1, 1])
print("N(1+sqrt2) =", elem_norm(u), "  (1+sqrt2)^5 =", (u**5).coords)
