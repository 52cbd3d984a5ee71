"""Digit expansions in base beta over monogenic orders Z[theta].

Exact arithmetic in Z[theta] and its quotients, prime ideal factorization,
local orders and Teichmuller lifts, kernel patterns of the reduction maps
<alpha mod P^r> -> <alpha mod P^(r-1)>, and digit statistics of alpha^n.
"""

from .beta_adic import (
    BlockComplexity,
    DigitSystem,
    Expansion,
    OrbitDigitStats,
    block_complexity,
    count_blocks,
    deviation_constant,
    digit_system,
    expand,
    orbit_digit_stats,
    orbit_size,
    recursion_threshold,
    stats_recursive,
)
from .erdos import (
    ErdosCount,
    digit_count,
    dupuy_weirich_avg,
    erdos_count,
    qary_digits,
)
from .lattice import IntegerLattice
from .local import (
    KernelPattern,
    LocalContext,
    detect_pattern,
    is_root_of_unity,
    kernel_report,
    kernel_sequence,
    kernel_size,
    lifting_threshold,
    local_context,
    mult_order,
    teichmuller,
    unit_group_size,
    v_sequence,
)
from .primes import (
    BetaFactorization,
    PrimeIdealFactor,
    factor_beta,
    factor_mod_p,
    factor_rational_prime,
    valuation,
)
from .ring import (
    NumberRing,
    QuotientRing,
    RingElement,
    elem_add,
    elem_mul,
    elem_norm,
    elem_sub,
    exact_divide,
    principal_lattice,
    quotient_reduce,
    ring_new,
)

__version__ = "0.1.0"
