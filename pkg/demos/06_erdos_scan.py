# Which powers of 2 have ternary expansions without the digit 2?
import io

from betadic import digit_count, erdos_count, qary_digits
from betadic.erdos import narkiewicz_bound, write_erdos_csv

for n in (0, 2, 8, 9):
    print(f"2^{n} in base 3:", "".join(map(str, reversed(qary_digits(2**n, 3)))))

# %% Scan n <= 10^4; the bound M(N) <= 1.62 N^(log_3 2) is asserted at every N.
res = erdos_count(10**4)
print("hits:", res.hits, " M(N) =", res.M_N, " bound =", round(res.bound, 2))
print("bound at N=100:", round(narkiewicz_bound(100), 3))

# %% Digit counts and their normalised ratio.
print("ones in 2^100 (base 3):", digit_count(100, 2, 3, 1))

# %% Plot-ready CSV of (N, M(N), bound).
buf = io.StringIO()
write_erdos_csv(erdos_count(12), buf)
print(buf.getvalue())
