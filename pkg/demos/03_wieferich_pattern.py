# Kernel sizes of <alpha mod P^r> -> <alpha mod P^(r-1)> and the threshold v.
from betadic import NumberRing, detect_pattern, factor_rational_prime, kernel_sequence, local_context

Z = NumberRing([0, 1])

# %% 1093 is a Wieferich prime: 2^1092 = 1 mod 1093^2, so the kernel at r=2 is trivial.
ctx = local_context(factor_rational_prime(Z, 1093)[0])
print("kernels:", kernel_sequence(ctx, 2, 6))
pat = detect_pattern(ctx, 2, 30)
print("threshold v =", pat.v, " verified up to r =", pat.verified_up_to)

# %% Over an ordinary prime the kernel is p from r=2 on.
print("p=3:", detect_pattern(local_context(factor_rational_prime(Z, 3)[0]), 2, 30).v)

# %% At the ramified prime above 2 in Z[i] (e=2) the kernel alternates 1, 2, 1, 2 ...
G = NumberRing([1, 0, 1])
ctx = local_context(factor_rational_prime(G, 2)[0])
pat = detect_pattern(ctx, [2, 1], 30)
print("alpha=2+i: v =", pat.v, " lifting (l, v(l)) =", (pat.lifting_index, pat.lifting_value))
print("sizes:", [s for _, s in pat.kernels])
