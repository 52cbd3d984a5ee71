# Average digit frequencies in the first m ternary digits of 2^n.
from fractions import Fraction

from betadic import NumberRing, digit_system, orbit_digit_stats, stats_recursive

Z = NumberRing([0, 1])
ds = digit_system(Z, 3)

# %% Walk the cyclic orbit of 2 modulo 3^m; h_m = 2 * 3^(m-1).
for m in range(1, 9):
    s = orbit_digit_stats(ds, 2, m)
    dev = max(abs(f - Fraction(1, 3)) for f in s.freq)
    print(f"m={m:2d} h_m={s.h_m:6d} freq={[str(f) for f in s.freq]} max|f-1/3|={dev}")

# %% Once h_m = 3 h_(m-1), the counts follow D_m = 3 D_(m-1) + h_(m-1).
base = orbit_digit_stats(ds, 2, 1)
print("m=12 from the recursion:", [str(f) for f in stats_recursive(ds, 2, 12, base).freq])
