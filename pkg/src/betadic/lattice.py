"""Full-rank sublattices of Z^d in column Hermite normal form.

A lattice is stored as an upper triangular basis whose *columns* are the
generators.  Column ``i`` has its pivot at row ``i`` and is zero below it,
the pivot is positive and every entry to the right of a pivot is reduced
into ``[0, pivot)``.  Reducing a vector against that basis from the last row
upward gives the canonical coset representative used throughout the package.
"""

from math import prod


def xgcd(a, b):
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def hnf_columns(gens, d, modulus):
    """HNF of the lattice spanned by ``gens`` together with ``modulus * Z^d``.

    ``gens`` is an iterable of length-``d`` integer vectors.  ``modulus`` must
    be a positive integer whose multiples of the unit vectors lie in the
    lattice; intermediate entries are kept reduced modulo it.  Returns the
    basis as a tuple of rows (``basis[i][j]`` is row ``i`` of column ``j``).
    """
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    D = modulus
    work = [[c % D for c in v] for v in gens]
    work = [v for v in work if any(v)]
    cols = [None] * d
    for i in range(d - 1, -1, -1):
        # D*e_i joins the pool at its own step; D*e_j for j < i stays implicit,
        # which is what licenses reducing rows < i modulo D.
        pivot = [0] * d
        pivot[i] = D
        rest = []
        for v in work:
            b = v[i]
            if b == 0:
                rest.append(v)
                continue
            a = pivot[i]
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            new_piv = [x * pa + y * vb for pa, vb in zip(pivot, v)]
            other = [ag * vb - bg * pa for pa, vb in zip(pivot, v)]
            for j in range(i):
                new_piv[j] %= D
                other[j] %= D
            pivot = new_piv
            other[i] = 0
            if any(other[:i]):
                rest.append(other)
        cols[i] = pivot
        work = rest
    # cols[i][i] > 0 by construction (gcd with D); reduce entries right of pivots
    for j in range(d):
        col = cols[j]
        for i in range(j - 1, -1, -1):
            q = col[i] // cols[i][i]
            if q:
                ci = cols[i]
                for r in range(i + 1):
                    col[r] -= q * ci[r]
    return tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))


class IntegerLattice:
    """Immutable full-rank lattice in Z^d given by its column HNF basis."""

    __slots__ = ("basis", "d", "determinant", "_cols")

    def __init__(self, basis):
        d = len(basis)
        rows = tuple(tuple(int(c) for c in row) for row in basis)
        for i in range(d):
            if len(rows[i]) != d:
                raise ValueError("basis must be square")
            if rows[i][i] <= 0:
                raise ValueError("diagonal entries must be positive")
            for j in range(d):
                if j < i and rows[i][j] != 0:
                    raise ValueError("basis must be upper triangular")
                if j > i and not 0 <= rows[i][j] < rows[i][i]:
                    raise ValueError("off-diagonal entry not reduced")
        self.basis = rows
        self.d = d
        self.determinant = prod(rows[i][i] for i in range(d))
        self._cols = tuple(tuple(rows[r][j] for r in range(j + 1)) for j in range(d))

    @classmethod
    def from_generators(cls, gens, d, modulus):
        return cls(hnf_columns(gens, d, modulus))

    @property
    def diagonal(self):
        return tuple(self.basis[i][i] for i in range(self.d))

    def column(self, j):
        return tuple(self.basis[i][j] for i in range(self.d))

    def reduce(self, vec):
        """Canonical representative of ``vec`` modulo the lattice."""
        v = list(vec)
        cols = self._cols
        for i in range(self.d - 1, -1, -1):
            col = cols[i]
            q = v[i] // col[i]
            if q:
                for r in range(i + 1):
                    v[r] -= q * col[r]
        return tuple(v)

    def __contains__(self, vec):
        return not any(self.reduce(vec))

    def contains_lattice(self, other):
        return all(other.column(j) in self for j in range(other.d))

    def __eq__(self, other):
        return isinstance(other, IntegerLattice) and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"IntegerLattice({[list(r) for r in self.basis]})"
