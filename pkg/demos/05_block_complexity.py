# Growth of the number of distinct m-digit blocks among the powers of alpha.
from betadic import NumberRing, block_complexity, count_blocks, digit_system

G = NumberRing([1, 0, 1])

# %% Ramified base 1+i: blocks grow like 2^(m/2), slope -> 1/2.
ds = digit_system(G, [1, 1])
bc = block_complexity(ds, [2, 1], 40)
for m, c, slope in bc.rows[::8]:
    print(f"m={m:2d} C_m={c} slope={slope:.4f}")
print("limit:", bc.limit_exact)

# %% Direct block counting agrees with the orbit order for small m.
print([count_blocks(ds, [2, 1], m) for m in range(1, 7)])
print([c for _, c, _ in bc.rows[:6]])

# %% Inert base 3 (residue degree 2): again limit 1/2.
bc3 = block_complexity(digit_system(G, 3), [1, 1], 8)
print("beta=3:", f"{bc3.rows[-1][2]:.4f}", "->", bc3.limit_exact)
